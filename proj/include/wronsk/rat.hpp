#ifndef WRONSK_RAT_HPP
#define WRONSK_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace wronsk {

/// Exact rational scalar. GMP keeps it reduced with a positive denominator.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Total order used for canonical sorting: by absolute value, then positive before negative.
inline std::strong_ordering canonical_compare(const Rat& a, const Rat& b) {
  const int by_abs = cmp(abs(a), abs(b));
  if (by_abs != 0) return by_abs < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int sa = sgn(a), sb = sgn(b);
  if (sa == sb) return std::strong_ordering::equal;
  return sa > sb ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace wronsk

#endif  // WRONSK_RAT_HPP
