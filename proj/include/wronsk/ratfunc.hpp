#ifndef WRONSK_RATFUNC_HPP
#define WRONSK_RATFUNC_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/poly.hpp"
#include "wronsk/rat.hpp"

namespace wronsk {

/// An element of Q(z), the field of meromorphic functions on the Riemann sphere.
///
/// Always stored canonically: gcd(num, den) = 1 and den monic, so two values
/// are equal exactly when their fields are identical.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}              // NOLINT(google-explicit-constructor)
  RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RatFunc z() { return RatFunc(Poly::z()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  std::optional<Rat> constant_value() const {
    if (!is_constant()) return std::nullopt;
    return num_.coeff(0);
  }

  RatFunc inverse() const {
    if (is_zero()) throw ZeroDivisionError("inverse of the zero rational function");
    return RatFunc(den_, num_);
  }

  /// Formal derivative d/dz by the quotient rule.
  RatFunc derivative() const {
    if (den_.is_one()) return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RatFunc nth_derivative(std::size_t k) const {
    RatFunc r = *this;
    for (std::size_t i = 0; i < k; ++i) r = r.derivative();
    return r;
  }

  /// Integer power; negative exponents require a nonzero base.
  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<unsigned>(e);
    RatFunc r;
    r.num_ = num_.pow(ue);
    r.den_ = den_.pow(ue);
    return r;  // powers of coprime polynomials stay coprime
  }

  /// Substitution x(inner(z)). Throws ZeroDivisionError when the substituted
  /// denominator vanishes identically.
  RatFunc compose(const RatFunc& inner) const {
    if (is_constant()) return *this;
    const std::size_t m = std::max(num_.degree().value_or(0), *den_.degree());
    const Poly& p = inner.num_;
    const Poly& q = inner.den_;
    std::vector<Poly> p_pow{Poly(1L)}, q_pow{Poly(1L)};
    for (std::size_t i = 1; i <= m; ++i) {
      p_pow.push_back(p_pow.back() * p);
      q_pow.push_back(q_pow.back() * q);
    }
    auto homogenize = [&](const Poly& f) {
      Poly acc;
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        acc += p_pow[i] * q_pow[m - i] * f.coeffs()[i];
      }
      return acc;
    };
    Poly new_den = homogenize(den_);
    if (new_den.is_zero()) throw ZeroDivisionError("composition makes the denominator vanish identically");
    return RatFunc(homogenize(num_), std::move(new_den));
  }

  /// Evaluation at a rational point; nullopt at a pole.
  std::optional<Rat> eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return Rat(num_.eval(x) / d);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel first to keep intermediate degrees small.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.normalize_leading();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Canonical text: ascending powers, `(num)/(den)` when not a polynomial.
  std::string to_string(char var = 'z') const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw ZeroDivisionError("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1L);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    normalize_leading();
  }

  void normalize_leading() {
    const Rat lead = den_.leading();
    if (lead != 1) {
      const Rat inv = 1 / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_;
  Poly den_;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class Mobius {
 public:
  Mobius(Rat a, Rat b, Rat c, Rat d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0) throw ConstantMapError("Mobius map with ad - bc = 0");
  }

  static Mobius inversion() { return Mobius(Rat(0), Rat(1), Rat(1), Rat(0)); }

  const Rat& a() const noexcept { return a_; }
  const Rat& b() const noexcept { return b_; }
  const Rat& c() const noexcept { return c_; }
  const Rat& d() const noexcept { return d_; }

  RatFunc as_ratfunc() const {
    return RatFunc(Poly(std::vector<Rat>{b_, a_}), Poly(std::vector<Rat>{d_, c_}));
  }

  Mobius inverse() const { return Mobius(d_, Rat(-b_), Rat(-c_), a_); }

  /// (this ∘ inner)(z) = this(inner(z)).
  Mobius after(const Mobius& inner) const {
    return Mobius(Rat(a_ * inner.a_ + b_ * inner.c_), Rat(a_ * inner.b_ + b_ * inner.d_),
                  Rat(c_ * inner.a_ + d_ * inner.c_), Rat(c_ * inner.b_ + d_ * inner.d_));
  }

 private:
  Rat a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

inline RatFunc compose(const RatFunc& x, const RatFunc& inner) { return x.compose(inner); }
inline RatFunc compose(const RatFunc& x, const Mobius& m) { return x.compose(m.as_ratfunc()); }

}  // namespace wronsk

#endif  // WRONSK_RATFUNC_HPP
