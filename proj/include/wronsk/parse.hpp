#ifndef WRONSK_PARSE_HPP
#define WRONSK_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/ratfunc.hpp"

namespace wronsk {

namespace detail {

// Recursive descent over
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := 'z' | rational | '(' expr ')'
//   rational := digits ('/' digits)?
class ExprParser {
 public:
  explicit ExprParser(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::string digits() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", offset_ + at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    RatFunc b = base();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      b = b.pow(std::stol(e));
    }
    return b;
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'z') {
      ++pos_;
      return RatFunc::z();
    }
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat r(digits());
      return RatFunc(r);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression such as `(z^2-1)/(z-1)` into its canonical RatFunc.
inline RatFunc parse_ratfunc(std::string_view text) { return detail::ExprParser(text).parse(); }

/// A piece of a larger input plus its offset, for position-accurate diagnostics.
struct TextPiece {
  std::string_view text;
  std::size_t offset;
};

/// Splits on `sep` at bracket depth zero.
inline std::vector<TextPiece> split_top_level(std::string_view text, char sep, std::size_t offset = 0) {
  std::vector<TextPiece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back({text.substr(start, i - start), offset + start});
      start = i + 1;
    }
  }
  out.push_back({text.substr(start), offset + start});
  return out;
}

/// Comma-separated list of expressions, e.g. `1, z, z^2`.
inline std::vector<RatFunc> parse_ratfunc_list(std::string_view text) {
  std::vector<RatFunc> out;
  for (const auto& piece : split_top_level(text, ',')) out.push_back(detail::ExprParser(piece.text, piece.offset).parse());
  return out;
}

/// A plain rational constant such as `-3/2`.
inline Rat parse_rational(std::string_view text, std::size_t offset = 0) {
  RatFunc r = detail::ExprParser(text, offset).parse();
  auto v = r.constant_value();
  if (!v) throw ParseError("expected a rational constant", offset);
  return *v;
}

/// Nested list `[[a, b], [c, d]]` of expressions, row-major.
inline std::vector<std::vector<RatFunc>> parse_nested_rows(std::string_view text, std::size_t offset = 0) {
  auto strip = [](std::string_view s, std::size_t& off) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
      ++off;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto unbracket = [](std::string_view s, std::size_t off) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected '[...]'", off);
    return s.substr(1, s.size() - 2);
  };
  std::size_t off = offset;
  std::string_view body = unbracket(strip(text, off), off);
  std::vector<std::vector<RatFunc>> rows;
  for (const auto& row_piece : split_top_level(body, ',', off + 1)) {
    std::size_t roff = row_piece.offset;
    std::string_view row = unbracket(strip(row_piece.text, roff), roff);
    std::vector<RatFunc> entries;
    for (const auto& e : split_top_level(row, ',', roff + 1)) entries.push_back(detail::ExprParser(e.text, e.offset).parse());
    rows.push_back(std::move(entries));
  }
  return rows;
}

}  // namespace wronsk

#endif  // WRONSK_PARSE_HPP
