#ifndef QUARTJAC_QVAL_HPP
#define QUARTJAC_QVAL_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "quartjac/realball.hpp"

namespace quartjac {

// A real quantity that is either an exact rational or a certified-interval
// value backed by a refinement closure (precision -> ball).  Copies share
// state, so structural identity doubles as a cheap equality witness.
class QVal {
 public:
  QVal();  // exact 0
  static QVal exact(const mpq_class& v);
  static QVal exact(const mpq_class& v, std::string expr);
  static QVal algebraic(std::function<RealBall(Precision)> eval, std::string expr);

  bool is_exact() const;
  const mpq_class& rational() const;  // throws internal_error unless exact
  RealBall ball(Precision prec) const;
  const std::string& expr() const;
  QVal with_expr(std::string expr) const;
  bool same_object(const QVal& o) const { return impl_ == o.impl_; }

  friend QVal operator+(const QVal& x, const QVal& y);
  friend QVal operator-(const QVal& x, const QVal& y);
  friend QVal operator*(const QVal& x, const QVal& y);
  friend QVal operator/(const QVal& x, const QVal& y);
  QVal operator-() const;
  QVal square() const;
  // Exact result for perfect rational squares, closure otherwise; the value
  // must be certified nonnegative when evaluated.
  QVal sqrt() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  explicit QVal(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

enum class Cmp { Less, Equal, Greater };

// Certified three-way compare.  Equal is returned for structurally shared
// values and exact-exact ties; otherwise refinement runs until the balls
// separate.  The throwing variant raises precision_exhausted when the cap
// is hit; try_compare returns nullopt instead.
Cmp qval_compare(const QVal& x, const QVal& y);
std::optional<Cmp> qval_try_compare(const QVal& x, const QVal& y);

// Certified strict positivity of x - y, as a ball usable for gap reporting.
RealBall certified_gap(const QVal& larger, const QVal& smaller);

}  // namespace quartjac

#endif
