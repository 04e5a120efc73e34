#ifndef WRONSK_WRONSKIAN_HPP
#define WRONSK_WRONSKIAN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/matrix.hpp"
#include "wronsk/ratfunc.hpp"

namespace wronsk {

/// A meromorphic map U -> C^n written in a basis: (a_1, ..., a_n).
class VecSection {
 public:
  VecSection() = default;
  explicit VecSection(std::vector<RatFunc> components) : components_(std::move(components)) {
    if (components_.empty()) throw DimensionError("a section needs at least one component");
  }
  VecSection(std::initializer_list<RatFunc> c) : VecSection(std::vector<RatFunc>(c)) {}

  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<RatFunc>& components() const noexcept { return components_; }
  const RatFunc& operator[](std::size_t i) const { return components_[i]; }

  bool is_zero() const {
    for (const auto& c : components_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// f * A.
  VecSection scaled(const RatFunc& f) const {
    std::vector<RatFunc> c;
    c.reserve(size());
    for (const auto& a : components_) c.push_back(f * a);
    return VecSection(std::move(c));
  }

  /// A ∘ inner.
  VecSection compose(const RatFunc& inner) const {
    std::vector<RatFunc> c;
    c.reserve(size());
    for (const auto& a : components_) c.push_back(a.compose(inner));
    return VecSection(std::move(c));
  }

  /// Row vector times a constant change-of-basis matrix: (A·T)_j = sum_i a_i T_ij.
  VecSection times(const RatMatrix& t) const {
    if (t.rows() != size()) throw DimensionError("basis change dimension mismatch");
    std::vector<RatFunc> c(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j)
      for (std::size_t i = 0; i < size(); ++i) c[j] += components_[i] * t(i, j);
    return VecSection(std::move(c));
  }

  friend bool operator==(const VecSection&, const VecSection&) = default;

  std::string to_string(char var = 'z') const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) out += (i ? ", " : "") + components_[i].to_string(var);
    return out;
  }

 private:
  std::vector<RatFunc> components_;
};

/// W(A): row i holds the i-th derivatives, W(A)(i, j) = a_j^(i), 0-indexed.
inline RatMatrix wronskian_matrix(const VecSection& a) {
  const std::size_t n = a.size();
  RatMatrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatFunc d = a[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) d = d.derivative();
      w(i, j) = d;
    }
  }
  return w;
}

inline RatFunc wronskian_det(const VecSection& a) { return det(wronskian_matrix(a)); }

/// Components linearly independent over constants, i.e. w(A) is not identically zero.
inline bool is_generic(const VecSection& a) { return !wronskian_det(a).is_zero(); }

/// A/B = W(B)^-1 W(A), an endomorphism-valued meromorphic function.
inline RatMatrix quotient(const VecSection& a, const VecSection& b) {
  if (a.size() != b.size()) throw DimensionError("quotient of sections of different rank");
  RatMatrix wb = wronskian_matrix(b);
  if (det(wb).is_zero()) throw NotGenericError("denominator section is not generic");
  return solve(wb, wronskian_matrix(a));
}

/// Φ_n(f) with W(fA) = Φ_n(f) W(A). In 0-indexed form
/// Φ(i, j) = C(i, j) f^(i-j) for i >= j and 0 above the diagonal.
inline RatMatrix phi_matrix(const RatFunc& f, std::size_t n) {
  std::vector<RatFunc> derivs{f};
  for (std::size_t k = 1; k < n; ++k) derivs.push_back(derivs.back().derivative());
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class binom = 1;  // C(i, i - d) walked down from d = 0
    for (std::size_t j = i + 1; j-- > 0;) {
      const std::size_t d = i - j;
      if (d > 0) binom = binom * static_cast<unsigned long>(i - d + 1) / static_cast<unsigned long>(d);
      m(i, j) = RatFunc(Rat(binom)) * derivs[d];
    }
  }
  return m;
}

enum class LambdaMethod { recursive, faa_di_bruno };

namespace detail {

inline std::vector<RatFunc> derivative_table(const RatFunc& f, std::size_t count) {
  std::vector<RatFunc> d{f};
  for (std::size_t k = 1; k <= count; ++k) d.push_back(d.back().derivative());
  return d;
}

// Row i+1 of Λ is the derivative of row i: Λ[i+1][j] = Λ[i][j]' + λ'·Λ[i][j-1].
inline RatMatrix lambda_recursive(const RatFunc& lam, std::size_t n) {
  const RatFunc dlam = lam.derivative();
  RatMatrix m(n, n);
  m(0, 0) = RatFunc(1L);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j <= i + 1; ++j) {
      RatFunc e;
      if (j <= i) e = m(i, j).derivative();
      if (j >= 1) e += dlam * m(i, j - 1);
      m(i + 1, j) = e;
    }
  }
  return m;
}

// Partial Bell polynomial B_{i,j}(λ', λ'', ...) by enumerating multiplicity
// vectors (m_1..m_i) with Σ t·m_t = i and Σ m_t = j:
//   i! / Π (m_t! (t!)^{m_t}) · Π (λ^(t))^{m_t}.
inline RatFunc partial_bell(std::size_t i, std::size_t j, const std::vector<RatFunc>& lam_derivs) {
  if (i == 0 && j == 0) return RatFunc(1L);
  if (i == 0 || j == 0) return RatFunc();
  std::vector<mpz_class> fact(i + 1, 1);
  for (std::size_t t = 1; t <= i; ++t) fact[t] = fact[t - 1] * static_cast<unsigned long>(t);

  RatFunc total;
  std::vector<std::size_t> mult(i + 1, 0);
  // Recurse over part sizes t = i..1, choosing how many parts of each size.
  auto rec = [&](auto&& self, std::size_t t, std::size_t weight_left, std::size_t parts_left) -> void {
    if (t == 0) {
      if (weight_left != 0 || parts_left != 0) return;
      mpz_class den = 1;
      RatFunc prod(1L);
      for (std::size_t s = 1; s <= i; ++s) {
        if (mult[s] == 0) continue;
        mpz_class fs;
        mpz_pow_ui(fs.get_mpz_t(), fact[s].get_mpz_t(), mult[s]);
        den *= fact[mult[s]] * fs;
        prod *= lam_derivs[s].pow(static_cast<long>(mult[s]));
      }
      Rat coeff(fact[i], den);
      coeff.canonicalize();
      total += RatFunc(coeff) * prod;
      return;
    }
    for (std::size_t k = 0; k * t <= weight_left && k <= parts_left; ++k) {
      mult[t] = k;
      self(self, t - 1, weight_left - k * t, parts_left - k);
    }
    mult[t] = 0;
  };
  rec(rec, i, i, j);
  return total;
}

inline RatMatrix lambda_faa_di_bruno(const RatFunc& lam, std::size_t n) {
  const auto derivs = derivative_table(lam, n);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = partial_bell(i, j, derivs);
  return m;
}

}  // namespace detail

/// Λ_n(λ) with W(A∘λ) = Λ_n(λ)·(W(A)∘λ). Lower triangular with diagonal
/// 1, λ', ..., (λ')^(n-1).
inline RatMatrix lambda_matrix(const RatFunc& lam, std::size_t n, LambdaMethod method = LambdaMethod::recursive) {
  if (lam.is_constant()) throw ConstantMapError("coordinate change must be non-constant");
  return method == LambdaMethod::recursive ? detail::lambda_recursive(lam, n) : detail::lambda_faa_di_bruno(lam, n);
}

inline RatMatrix lambda_matrix(const Mobius& m, std::size_t n, LambdaMethod method = LambdaMethod::recursive) {
  return lambda_matrix(m.as_ratfunc(), n, method);
}

}  // namespace wronsk

#endif  // WRONSK_WRONSKIAN_HPP
