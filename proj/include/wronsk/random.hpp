#ifndef WRONSK_RANDOM_HPP
#define WRONSK_RANDOM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wronsk/bundle.hpp"
#include "wronsk/matrix.hpp"
#include "wronsk/ratfunc.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// Retry cap for rejection sampling; exceeding it is a hard error.
inline constexpr int kMaxRejections = 200;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Per-trial seed: independent of execution order.
inline std::uint64_t trial_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master ^ h) + index);
}

/// mt19937_64 with a portable bounded draw (std distributions differ across
/// standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }
  long nonzero(long bound) {
    long v;
    do {
      v = uniform(-bound, bound);
    } while (v == 0);
    return v;
  }
  bool coin(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Nonzero polynomial with integer coefficients in [-bound, bound], degree <= max_degree.
inline Poly random_poly(Rng& rng, std::size_t max_degree, long bound) {
  for (;;) {
    std::vector<Rat> c(max_degree + 1);
    for (auto& x : c) x = Rat(rng.uniform(-bound, bound));
    Poly p(std::move(c));
    if (!p.is_zero()) return p;
  }
}

/// Non-constant polynomial of degree exactly `degree` (>= 1).
inline Poly random_poly_of_degree(Rng& rng, std::size_t degree, long bound) {
  std::vector<Rat> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = Rat(rng.uniform(-bound, bound));
  c[degree] = Rat(rng.nonzero(bound));
  return Poly(std::move(c));
}

/// Nonzero rational function; a polynomial with probability (100 - rational_percent)%.
inline RatFunc random_ratfunc(Rng& rng, std::size_t max_degree, long bound, int rational_percent = 30) {
  Poly num = random_poly(rng, max_degree, bound);
  if (!rng.coin(rational_percent)) return RatFunc(num);
  const std::size_t dd = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(std::max<std::size_t>(1, max_degree / 2))));
  return RatFunc(num, random_poly_of_degree(rng, dd, bound));
}

inline VecSection random_section(Rng& rng, std::size_t n, std::size_t max_degree, long bound, int rational_percent = 30) {
  std::vector<RatFunc> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_ratfunc(rng, max_degree, bound, rational_percent));
  return VecSection(std::move(c));
}

inline VecSection random_generic_section(Rng& rng, std::size_t n, std::size_t max_degree, long bound,
                                         int rational_percent = 30) {
  // Polynomials of degree < n - 1 cannot span n independent components.
  const std::size_t deg = std::max(max_degree, n - 1);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    VecSection s = random_section(rng, n, deg, bound, rational_percent);
    if (is_generic(s)) return s;
  }
  throw std::runtime_error("could not draw a generic section within the retry cap");
}

inline Mobius random_mobius(Rng& rng, long bound) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Rat a(rng.uniform(-bound, bound)), b(rng.uniform(-bound, bound));
    Rat c(rng.uniform(-bound, bound)), d(rng.uniform(-bound, bound));
    if (a * d - b * c != 0) return Mobius(a, b, c, d);
  }
  throw std::runtime_error("could not draw a Mobius map within the retry cap");
}

inline RatMatrix random_invertible_constant(Rng& rng, std::size_t n, long bound) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = RatFunc(Rat(rng.uniform(-bound, bound)));
    if (!det(t).is_zero()) return t;
  }
  throw std::runtime_error("could not draw an invertible matrix within the retry cap");
}

/// Invertible matrix over Q(z) with polynomial entries of degree <= max_degree.
inline RatMatrix random_invertible_matrix(Rng& rng, std::size_t n, std::size_t max_degree, long bound) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> c(max_degree + 1);
        for (auto& x : c) x = Rat(rng.uniform(-bound, bound));
        m(i, j) = RatFunc(Poly(std::move(c)));
      }
    if (!det(m).is_zero()) return m;
  }
  throw std::runtime_error("could not draw an invertible matrix within the retry cap");
}

/// Random two-chart pf bundle: rank in [min_rank, max_rank], k in [k_lo, k_hi].
inline PFBundle random_bundle(Rng& rng, std::size_t min_rank, std::size_t max_rank, long k_lo, long k_hi, long bound) {
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_rank), static_cast<long>(max_rank)));
  const long k = rng.uniform(k_lo, k_hi);
  Rat c(rng.nonzero(bound), rng.uniform(1, bound));
  c.canonicalize();
  return PFBundle(n, k, c, random_invertible_constant(rng, n, bound));
}

inline Section random_generic_probe(Rng& rng, const PFBundle& v, std::size_t max_degree, long bound) {
  return Section(v, random_generic_section(rng, v.rank(), max_degree, bound, 0));
}

}  // namespace wronsk

#endif  // WRONSK_RANDOM_HPP
