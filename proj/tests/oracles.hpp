#ifndef WRONSK_TEST_ORACLES_HPP
#define WRONSK_TEST_ORACLES_HPP

// Independent reference computations used only by tests.

#include <cstddef>
#include <vector>

#include "wronsk.hpp"

namespace wronsk::oracle {

/// Laplace expansion along the first row. Exponential; small n only.
inline RatFunc cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  RatFunc total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    RatFunc term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

/// Cramer's rule for the ODE coefficients of a generic section: solve
/// W(A)^T c = (a_j^(n)) with c_i = p_{n-i}.
inline std::vector<RatFunc> cramer_ode(const VecSection& a) {
  const std::size_t n = a.size();
  RatMatrix wt(n, n);
  std::vector<RatFunc> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) wt(j, i) = a[j].nth_derivative(i);
    rhs[j] = a[j].nth_derivative(n);
  }
  const RatFunc d = cofactor_det(wt);
  std::vector<RatFunc> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix mi = wt;
    for (std::size_t j = 0; j < n; ++j) mi(j, i) = rhs[j];
    p[n - 1 - i] = cofactor_det(mi) / d;
  }
  return p;
}

/// Order of r at the rational point x, by repeated division by (z - x).
inline long valuation_at(const RatFunc& r, const Rat& x) {
  const Poly lin(std::vector<Rat>{Rat(-x), Rat(1)});
  auto count = [&](Poly p) {
    long v = 0;
    for (;;) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero()) return v;
      p = q;
      ++v;
    }
  };
  return count(r.num()) - count(r.den());
}

/// Order at infinity by substituting z = 1/w and reading the order at w = 0.
inline long valuation_at_infinity(const RatFunc& r) {
  return valuation_at(r.compose(RatFunc(Poly(1L), Poly::z())), Rat(0));
}

/// W(A_inf) in the w chart assembled from the transformation rules instead of
/// differentiating the transferred section:
///   A_inf = c^-1 w^k T^-1 (A0 ∘ 1/w)  =>  W(A_inf) = Φ_n(c^-1 w^k) Λ_n(1/w) (W(A0) ∘ 1/w) T^-T.
inline RatMatrix transferred_wronskian(const Section& s) {
  const PFBundle& v = s.bundle;
  const std::size_t n = v.rank();
  const RatFunc inv(Poly(1L), Poly::z());
  const RatFunc scale = RatFunc(Rat(1 / v.c())) * RatFunc::z().pow(v.k());
  return phi_matrix(scale, n) * lambda_matrix(inv, n, LambdaMethod::faa_di_bruno) *
         wronskian_matrix(s.a0).compose(inv) * v.t_inverse().transpose();
}

/// deg w(V) from one probe, counted by hand: finite zeros minus finite poles of
/// w(A0), plus the order at w = 0 of det W(A_inf) built from the transformation rules.
inline long wronskian_degree(const Section& s) {
  const std::size_t n = s.bundle.rank();
  RatMatrix w0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w0(i, j) = s.a0[j].nth_derivative(i);
  const RatFunc d0 = cofactor_det(w0);
  const long finite = static_cast<long>(*d0.num().degree()) - static_cast<long>(*d0.den().degree());
  return finite + valuation_at(cofactor_det(transferred_wronskian(s)), Rat(0));
}

}  // namespace wronsk::oracle

#endif  // WRONSK_TEST_ORACLES_HPP
