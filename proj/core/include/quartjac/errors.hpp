#ifndef QUARTJAC_ERRORS_HPP
#define QUARTJAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quartjac {

// Working precision in bits.
using Precision = long;

// Invalid input: wrong domain, malformed argument, violated precondition.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified decision could not be made at the current precision.  The
// caller is expected to retry at doubled precision (see refine_until).
class undecidable_error : public std::runtime_error {
 public:
  explicit undecidable_error(const std::string& what) : std::runtime_error(what) {}
};

// The precision-doubling loop hit the configured cap.
class precision_exhausted : public std::runtime_error {
 public:
  explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Minimal-polynomial recognition failed within the degree bound.
class recognition_error : public std::runtime_error {
 public:
  explicit recognition_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that should be unreachable was violated.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Cap for the precision-doubling loop, in bits.  Defaults to 2^20; the
// QT_PRECISION_CAP environment variable overrides it at process start.
Precision precision_cap();
void set_precision_cap(Precision bits);

// Runs f(prec) with prec doubling from `start` until f returns a value or
// the cap is exceeded.  f signals "not decidable yet" by throwing
// undecidable_error.
template <typename F>
auto refine_until(F&& f, Precision start) {
  Precision cap = precision_cap();
  for (Precision p = start; p <= cap; p *= 2) {
    try {
      return f(p);
    } catch (const undecidable_error&) {
      if (p * 2 > cap) break;
    }
  }
  throw precision_exhausted("certified decision still undecidable at the precision cap");
}

}  // namespace quartjac

#endif
