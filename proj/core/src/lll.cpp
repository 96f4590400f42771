#include "quartjac/lll.hpp"

#include "quartjac/errors.hpp"

namespace quartjac {

namespace {

mpz_class dot(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
  mpz_class s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  // nearest integer to a/b, b > 0
  mpz_class q;
  if (a >= 0) {
    mpz_class t = 2 * a + b;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  } else {
    mpz_class t = 2 * a - b;
    mpz_cdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  }
  return q;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw internal_error("lll: inexact division in integral GSO");
  return q;
}

}  // namespace

// Integral LLL after Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 2.6.3.  d[i] are the Gram determinants, lam[k][j] the
// scaled Gram-Schmidt coefficients.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
  const size_t n = basis.size();
  if (n <= 1) return;

  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, mpz_class(0)));
  d[0] = 1;
  d[1] = dot(basis[0], basis[0]);
  if (d[1] == 0) throw internal_error("lll: zero starting vector");

  size_t k = 2, kmax = 1;

  auto red = [&](size_t kk, size_t l) {
    if (2 * abs(lam[kk][l]) <= d[l]) return;
    mpz_class q = round_div(lam[kk][l], d[l]);
    auto& bk = basis[kk - 1];
    const auto& bl = basis[l - 1];
    for (size_t i = 0; i < bk.size(); ++i) bk[i] -= q * bl[i];
    lam[kk][l] -= q * d[l];
    for (size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };

  auto swap_step = [&](size_t kk) {
    std::swap(basis[kk - 1], basis[kk - 2]);
    for (size_t j = 1; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    mpz_class lambda = lam[kk][kk - 1];
    mpz_class B = exact_div(d[kk - 2] * d[kk] + lambda * lambda, d[kk - 1]);
    for (size_t i = kk + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][kk];
      lam[i][kk] = exact_div(d[kk] * lam[i][kk - 1] - lambda * t, d[kk - 1]);
      lam[i][kk - 1] = exact_div(B * t + lambda * lam[i][kk], d[kk]);
    }
    d[kk - 1] = B;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(basis[k - 1], basis[j - 1]);
        for (size_t i = 1; i < j; ++i)
          u = exact_div(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k)
          lam[k][j] = u;
        else {
          d[k] = u;
          if (d[k] == 0) throw internal_error("lll: dependent input rows");
        }
      }
    }
    red(k, k - 1);
    // Lovasz: swap iff 4 d_k d_{k-2} < 3 d_{k-1}^2 - 4 lam^2
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap_step(k);
      k = k > 2 ? k - 1 : 2;
    } else {
      for (size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
}

}  // namespace quartjac
