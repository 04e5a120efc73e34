#ifndef WRONSK_TEST_SUPPORT_HPP
#define WRONSK_TEST_SUPPORT_HPP

#include <string_view>

#include "wronsk.hpp"

namespace wronsk::testing {

inline RatFunc R(std::string_view s) { return parse_ratfunc(s); }

inline VecSection S(std::string_view s) { return VecSection(parse_ratfunc_list(s)); }

inline RatMatrix M(std::string_view s) { return RatMatrix::from_rows(parse_nested_rows(s)); }

inline Poly P(std::string_view s) {
  RatFunc r = parse_ratfunc(s);
  return r.num() * Rat(1 / r.den().leading());
}

}  // namespace wronsk::testing

#endif  // WRONSK_TEST_SUPPORT_HPP
