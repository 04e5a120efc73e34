#ifndef WRONSK_POLY_HPP
#define WRONSK_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/rat.hpp"

namespace wronsk {

/// Dense univariate polynomial over Q, coefficients in ascending powers.
///
/// The zero polynomial has an empty coefficient list and no degree
/// (`degree()` returns `std::nullopt`); every other polynomial has a nonzero
/// leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rat& c, std::size_t power) {
    if (c == 0) return {};
    std::vector<Rat> v(power + 1, Rat(0));
    v[power] = c;
    return Poly(std::move(v));
  }
  static Poly z() { return monomial(Rat(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Poly monic() const {
    if (is_zero()) return {};
    return *this * Rat(1 / leading());
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly pow(unsigned e) const {
    Poly result(1L), base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Quotient and remainder of Euclidean division. Throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw ZeroDivisionError("polynomial division by zero");
    if (coeffs_.size() < d.coeffs_.size()) return {Poly(), *this};
    std::vector<Rat> r = coeffs_;
    const std::size_t dn = d.coeffs_.size();
    std::vector<Rat> q(r.size() - dn + 1, Rat(0));
    const Rat inv_lead = 1 / d.leading();
    for (std::size_t i = q.size(); i-- > 0;) {
      const Rat& top = r[i + dn - 1];
      if (top == 0) continue;
      Rat factor = top * inv_lead;
      for (std::size_t j = 0; j < dn; ++j) r[i + j] -= factor * d.coeffs_[j];
      q[i] = std::move(factor);
    }
    r.resize(dn - 1);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  /// Division known to be exact. Throws std::logic_error if a remainder appears.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }

  bool divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rat> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return {};
    std::vector<Rat> v = a.coeffs_;
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical total order: degree first (zero lowest), then coefficients from
  /// the constant term upward under `canonical_compare`.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      auto c = canonical_compare(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// Ascending-power text, e.g. `-1 + z^2`.
  std::string to_string(char var = 'z') const { return render(var, false); }
  /// Descending-power compact text, e.g. `z^2-2`.
  std::string to_descending_string(char var = 'z') const { return render(var, true); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::string render(char var, bool descending) const {
    if (is_zero()) return "0";
    const char* plus = descending ? "+" : " + ";
    const char* minus = descending ? "-" : " - ";
    std::string out;
    bool first = true;
    auto term = [&](std::size_t i) {
      const Rat& c = coeffs_[i];
      if (c == 0) return;
      const bool negative = sgn(c) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? minus : plus;
      }
      first = false;
      const Rat mag = abs(c);
      if (i == 0) {
        out += mag.get_str();
        return;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    };
    if (descending) {
      for (std::size_t i = coeffs_.size(); i-- > 0;) term(i);
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) term(i);
    }
    return out;
  }

  std::vector<Rat> coeffs_;
};

/// Monic gcd over Q; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace wronsk

#endif  // WRONSK_POLY_HPP
