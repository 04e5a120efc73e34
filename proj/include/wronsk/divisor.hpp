#ifndef WRONSK_DIVISOR_HPP
#define WRONSK_DIVISOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/ratfunc.hpp"
#include "wronsk/squarefree.hpp"

namespace wronsk {

/// A finite part entry: all roots of `point` carry `multiplicity`.
struct DivisorTerm {
  Poly point;  // monic squarefree, degree >= 1
  long multiplicity;

  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// Divisor on P^1 over Q.
///
/// Closed points are grouped into Galois-stable sets given by monic squarefree
/// polynomials. The canonical form keeps one polynomial per distinct nonzero
/// multiplicity (the product of every point carrying it), sorted by the
/// polynomial order, so structural equality is divisor equality.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::vector<DivisorTerm> finite, long inf_mult) : inf_mult_(inf_mult) {
    finite_ = normalize(std::move(finite));
  }

  const std::vector<DivisorTerm>& finite_part() const noexcept { return finite_; }
  long inf_mult() const noexcept { return inf_mult_; }
  bool is_zero() const noexcept { return finite_.empty() && inf_mult_ == 0; }

  long degree() const {
    long d = inf_mult_;
    for (const auto& t : finite_) d += t.multiplicity * static_cast<long>(*t.point.degree());
    return d;
  }

  /// Multiplicity at the point(s) cut out by a monic squarefree polynomial
  /// dividing one canonical term; 0 if coprime to the support.
  long multiplicity_at(const Poly& point) const {
    for (const auto& t : finite_) {
      if (!gcd(t.point, point).is_constant()) return t.multiplicity;
    }
    return 0;
  }

  /// Same divisor with the point at infinity dropped.
  Divisor finite_only() const {
    Divisor d = *this;
    d.inf_mult_ = 0;
    return d;
  }
  Divisor with_inf_mult(long m) const {
    Divisor d = *this;
    d.inf_mult_ = m;
    return d;
  }

  friend bool operator==(const Divisor&, const Divisor&) = default;

  /// E.g. `2*(z) - 1*(z-1) - 1*(inf)`; the zero divisor prints as `0`.
  std::string to_string() const {
    std::vector<std::pair<long, std::string>> terms;
    for (const auto& t : finite_) terms.emplace_back(t.multiplicity, t.point.to_descending_string());
    if (inf_mult_ != 0) terms.emplace_back(inf_mult_, "inf");
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const long m = terms[i].first;
      if (i == 0) {
        if (m < 0) out += "-";
      } else {
        out += m < 0 ? " - " : " + ";
      }
      out += std::to_string(m < 0 ? -m : m) + "*(" + terms[i].second + ")";
    }
    return out;
  }

 private:
  static std::vector<DivisorTerm> normalize(std::vector<DivisorTerm> raw) {
    std::vector<Poly> pts;
    for (auto& t : raw) {
      if (t.point.is_constant()) throw std::invalid_argument("divisor point must have degree >= 1");
      pts.push_back(t.point.monic());
    }
    const std::vector<Poly> basis = coprime_basis(pts);
    std::map<long, Poly> by_mult;
    for (const auto& e : basis) {
      long m = 0;
      for (const auto& t : raw)
        if (!gcd(e, t.point).is_constant()) m += t.multiplicity;
      if (m == 0) continue;
      auto [it, fresh] = by_mult.try_emplace(m, e);
      if (!fresh) it->second *= e;
    }
    std::vector<DivisorTerm> out;
    for (auto& [m, p] : by_mult) out.push_back({std::move(p), m});
    std::sort(out.begin(), out.end(), [](const DivisorTerm& a, const DivisorTerm& b) { return a.point < b.point; });
    return out;
  }

  std::vector<DivisorTerm> finite_;
  long inf_mult_ = 0;
};

/// Zeros minus poles of a nonzero rational function, including infinity
/// with val_inf(r) = deg(den) - deg(num).
inline Divisor divisor_of(const RatFunc& r) {
  if (r.is_zero()) throw ZeroDivisionError("divisor of the zero function");
  std::vector<DivisorTerm> terms;
  for (const auto& f : squarefree_factor(r.num()).factors) terms.push_back({f.factor, f.multiplicity});
  for (const auto& f : squarefree_factor(r.den()).factors) terms.push_back({f.factor, -f.multiplicity});
  const long inf = static_cast<long>(*r.den().degree()) - static_cast<long>(*r.num().degree());
  return Divisor(std::move(terms), inf);
}

/// d1 + sign * d2 over a common coprime refinement.
inline Divisor divisor_combine(const Divisor& d1, const Divisor& d2, int sign = 1) {
  std::vector<DivisorTerm> terms = d1.finite_part();
  for (const auto& t : d2.finite_part()) terms.push_back({t.point, sign * t.multiplicity});
  return Divisor(std::move(terms), d1.inf_mult() + sign * d2.inf_mult());
}

inline Divisor operator+(const Divisor& a, const Divisor& b) { return divisor_combine(a, b, 1); }
inline Divisor operator-(const Divisor& a, const Divisor& b) { return divisor_combine(a, b, -1); }

inline long degree(const Divisor& d) { return d.degree(); }

/// Returns f with div(f^n) = d when d is n times a principal divisor on P^1
/// (all multiplicities divisible by n and degree zero); nullopt otherwise.
inline std::optional<RatFunc> is_nth_power(const Divisor& d, long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (d.degree() != 0 || d.inf_mult() % n != 0) return std::nullopt;
  RatFunc f(1L);
  for (const auto& t : d.finite_part()) {
    if (t.multiplicity % n != 0) return std::nullopt;
    f *= RatFunc(t.point).pow(t.multiplicity / n);
  }
  return f;
}

}  // namespace wronsk

#endif  // WRONSK_DIVISOR_HPP
