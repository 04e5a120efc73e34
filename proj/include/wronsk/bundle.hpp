#ifndef WRONSK_BUNDLE_HPP
#define WRONSK_BUNDLE_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wronsk/divisor.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/matrix.hpp"
#include "wronsk/ode.hpp"
#include "wronsk/parse.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// Projectively flat bundle on P^1 over the cover U0 = P^1 \ {inf} (coordinate z),
/// Uinf = P^1 \ {0} (coordinate w = 1/z). The transition from the infinity chart
/// to the zero chart is c z^k T:  s0(z) = c z^k T s_inf(1/z).
class PFBundle {
 public:
  PFBundle(std::size_t rank, long k, Rat c, RatMatrix t) : rank_(rank), k_(k), c_(std::move(c)), t_(std::move(t)) {
    if (rank_ == 0) throw std::invalid_argument("bundle rank must be positive");
    if (c_ == 0) throw std::invalid_argument("transition scalar c must be nonzero");
    if (t_.rows() != rank_ || t_.cols() != rank_) throw DimensionError("T must be rank x rank");
    if (!t_.is_constant()) throw std::invalid_argument("T must be a constant matrix");
    if (det(t_).is_zero()) throw SingularMatrixError("T must be invertible");
    t_inv_ = inverse(t_);
  }

  static PFBundle trivial(std::size_t rank) { return PFBundle(rank, 0, Rat(1), RatMatrix::identity(rank)); }

  std::size_t rank() const noexcept { return rank_; }
  long k() const noexcept { return k_; }
  const Rat& c() const noexcept { return c_; }
  const RatMatrix& t() const noexcept { return t_; }
  const RatMatrix& t_inverse() const noexcept { return t_inv_; }

  /// V ⊗ O(d).
  PFBundle twisted(long d) const { return PFBundle(rank_, k_ + d, c_, t_); }

  /// deg det V = n k: the determinant transition is c^n z^{nk} det T.
  long det_degree() const { return static_cast<long>(rank_) * k_; }

  friend bool operator==(const PFBundle& a, const PFBundle& b) {
    return a.rank_ == b.rank_ && a.k_ == b.k_ && a.c_ == b.c_ && a.t_ == b.t_;
  }

  /// `rank=2 k=1 c=3 T=[[1,1],[0,1]]`
  std::string to_string() const {
    std::string ts = "[";
    for (std::size_t i = 0; i < rank_; ++i) {
      ts += i ? ",[" : "[";
      for (std::size_t j = 0; j < rank_; ++j) ts += (j ? "," : "") + t_(i, j).to_string();
      ts += "]";
    }
    ts += "]";
    return "rank=" + std::to_string(rank_) + " k=" + std::to_string(k_) + " c=" + c_.get_str() + " T=" + ts;
  }

 private:
  std::size_t rank_;
  long k_;
  Rat c_;
  RatMatrix t_;
  RatMatrix t_inv_;
};

/// Parses `rank=2 k=1 c=3 T=[[1,1],[0,1]]`. Missing k, c, T default to 0, 1, Id.
inline PFBundle parse_bundle_spec(std::string_view text) {
  std::optional<std::size_t> rank;
  long k = 0;
  Rat c(1);
  std::optional<RatMatrix> t;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t key_start = i;
    while (i < text.size() && text[i] != '=' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string key(text.substr(key_start, i - key_start));
    if (i >= text.size() || text[i] != '=') throw ParseError("expected '=' after '" + key + "'", i);
    ++i;
    const std::size_t val_start = i;
    int depth = 0;
    while (i < text.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      ++i;
    }
    const std::string_view val = text.substr(val_start, i - val_start);
    if (val.empty()) throw ParseError("missing value for '" + key + "'", val_start);
    if (key == "rank") {
      Rat r = parse_rational(val, val_start);
      if (!is_integer(r) || r < 1) throw ParseError("rank must be a positive integer", val_start);
      rank = static_cast<std::size_t>(r.get_num().get_ui());
    } else if (key == "k") {
      Rat r = parse_rational(val, val_start);
      if (!is_integer(r) || !r.get_num().fits_slong_p()) throw ParseError("k must be an integer", val_start);
      k = r.get_num().get_si();
    } else if (key == "c") {
      c = parse_rational(val, val_start);
    } else if (key == "T") {
      RatMatrix m = RatMatrix::from_rows(parse_nested_rows(val, val_start));
      if (!m.is_constant()) throw ParseError("T entries must be constants", val_start);
      t = std::move(m);
    } else {
      throw ParseError("unknown key '" + key + "'", key_start);
    }
  }
  if (!rank) throw ParseError("missing rank", 0);
  return PFBundle(*rank, k, std::move(c), t ? *t : RatMatrix::identity(*rank));
}

/// A meromorphic section, stored by its chart-0 components.
struct Section {
  PFBundle bundle;
  VecSection a0;

  Section(PFBundle b, VecSection a) : bundle(std::move(b)), a0(std::move(a)) {
    if (a0.size() != bundle.rank()) throw DimensionError("section length differs from bundle rank");
  }
};

enum class Chart { zero, infinity };

inline const char* chart_name(Chart c) { return c == Chart::zero ? "0" : "inf"; }

/// coeff * d(coordinate) in the given chart.
struct MeroForm {
  Chart chart = Chart::zero;
  RatFunc coeff;

  /// Pullback along the coordinate change new -> old given by `change`
  /// (old coordinate as a function of the new one).
  MeroForm pullback(const RatFunc& change, Chart target) const {
    return {target, coeff.compose(change) * change.derivative()};
  }

  /// Re-expresses a form in the other chart of P^1 (w = 1/z).
  MeroForm to_chart(Chart target) const {
    if (target == chart) return *this;
    return pullback(RatFunc(Poly(1L), Poly::z()), target);
  }

  friend MeroForm operator-(const MeroForm& a, const MeroForm& b) {
    if (a.chart != b.chart) throw std::invalid_argument("forms live in different charts");
    return {a.chart, a.coeff - b.coeff};
  }
  bool is_zero() const { return coeff.is_zero(); }
};

namespace detail {

inline RatFunc inversion() { return RatFunc(Poly(1L), Poly::z()); }

/// Order of vanishing at z = 0 (negative for a pole). r must be nonzero.
inline long order_at_zero(const RatFunc& r) {
  auto low = [](const Poly& p) {
    long i = 0;
    while (p.coeff(static_cast<std::size_t>(i)) == 0) ++i;
    return i;
  };
  return low(r.num()) - low(r.den());
}

inline void require_generic(const Section& s) {
  if (!is_generic(s.a0)) throw NotGenericError("section is not generic");
}

}  // namespace detail

/// A_inf(w) = c^-1 w^k T^-1 A0(1/w), returned as a section in the chart
/// coordinate w (stored with the same indeterminate).
inline VecSection section_transfer(const Section& s) {
  const PFBundle& v = s.bundle;
  const VecSection pulled = s.a0.compose(detail::inversion());
  const RatFunc scale = RatFunc(Rat(1 / v.c())) * RatFunc::z().pow(v.k());
  std::vector<RatFunc> out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    RatFunc acc;
    for (std::size_t j = 0; j < v.rank(); ++j) acc += v.t_inverse()(i, j) * pulled[j];
    out[i] = scale * acc;
  }
  return VecSection(std::move(out));
}

inline bool is_generic_section(const Section& s) { return is_generic(s.a0); }

/// div w(A): finite part from w(A0) in z, multiplicity at infinity from the
/// order of w(A_inf) at w = 0.
inline Divisor global_wronskian_divisor(const Section& s) {
  const RatFunc w0 = wronskian_det(s.a0);
  if (w0.is_zero()) throw NotGenericError("section is not generic");
  const RatFunc winf = wronskian_det(section_transfer(s));
  return divisor_of(w0).with_inf_mult(detail::order_at_zero(winf));
}

/// Transition of the Wronskian line bundle on the overlap: w(A0)(z) / w(A_inf)(1/z).
inline RatFunc wronskian_transition(const Section& s) {
  detail::require_generic(s);
  const RatFunc winf = wronskian_det(section_transfer(s)).compose(detail::inversion());
  return wronskian_det(s.a0) / winf;
}

struct LineBundleDegree {
  long degree = 0;
  std::vector<Divisor> divisors;  // one per generic probe, in input order
  std::size_t probes_used = 0;
};

/// deg w(V) from the first generic probe, checking that every generic probe
/// gives the same degree and that pairwise differences are the principal
/// divisor of det(A/B).
inline LineBundleDegree wronskian_line_bundle_degree_detail(const PFBundle& v, const std::vector<Section>& probes) {
  LineBundleDegree out;
  const Section* first = nullptr;
  for (const auto& s : probes) {
    if (!(s.bundle == v)) throw ProbeError("probe section belongs to a different bundle");
    if (!is_generic_section(s)) continue;
    Divisor d = global_wronskian_divisor(s);
    if (first == nullptr) {
      first = &s;
      out.degree = d.degree();
    } else {
      if (d.degree() != out.degree) throw ProbeError("probe sections disagree on deg w(V)");
      const Divisor diff = d - out.divisors.front();
      if (!(diff == divisor_of(det(quotient(s.a0, first->a0)))))
        throw ProbeError("divisor difference of probes is not div det(A/B)");
    }
    out.divisors.push_back(std::move(d));
  }
  if (first == nullptr) throw ProbeError("no generic probe section supplied");
  out.probes_used = out.divisors.size();
  return out;
}

inline long wronskian_line_bundle_degree(const PFBundle& v, const std::vector<Section>& probes) {
  return wronskian_line_bundle_degree_detail(v, probes).degree;
}

/// deg w(V) against deg det V + (n(n-1)/2) deg K on the two-chart family.
struct QuestionReport {
  long deg_w = 0;
  long deg_det = 0;
  long canonical_term = 0;
  bool verdict = false;
  std::size_t probes_used = 0;
  std::string scope =
      "Degree-level comparison on the Riemann sphere only, for projectively flat bundles given by "
      "two-chart data c*z^k*T. On P^1 the degree determines the line bundle; nothing is claimed "
      "for curves of higher genus or bundles outside this family.";
};

inline constexpr long kCanonicalDegreeP1 = -2;

inline QuestionReport open_question_report(const PFBundle& v, const std::vector<Section>& probes) {
  const LineBundleDegree lb = wronskian_line_bundle_degree_detail(v, probes);
  const long n = static_cast<long>(v.rank());
  QuestionReport r;
  r.deg_w = lb.degree;
  r.deg_det = v.det_degree();
  r.canonical_term = n * (n - 1) / 2 * kCanonicalDegreeP1;
  r.verdict = r.deg_w == r.deg_det + r.canonical_term;
  r.probes_used = lb.probes_used;
  return r;
}

struct TwistCertificate {
  long d = 0;
  long deg_w = 0;
  long deg_w_twisted = 0;
  long expected = 0;  // deg_w + n d

  bool passed() const { return deg_w_twisted == expected; }
};

/// Recomputes deg w(V ⊗ O(d)) directly from the same chart-0 probes.
inline TwistCertificate tensor_twist_degree_check(const PFBundle& v, long d, const std::vector<Section>& probes) {
  const PFBundle vt = v.twisted(d);
  std::vector<Section> twisted_probes;
  for (const auto& s : probes) twisted_probes.emplace_back(vt, s.a0);
  TwistCertificate c;
  c.d = d;
  c.deg_w = wronskian_line_bundle_degree(v, probes);
  c.deg_w_twisted = wronskian_line_bundle_degree(vt, twisted_probes);
  c.expected = c.deg_w + static_cast<long>(v.rank()) * d;
  return c;
}

/// Two-chart cocycle of the Wronskian vector bundle W_A(V).
struct WvbCocycle {
  RatMatrix phi;
};

/// W(A_inf)^-1 W(A0) with W(A_inf) taken in its own coordinate w and then
/// rewritten with w = 1/z. det phi is the Wronskian line bundle transition.
inline WvbCocycle wvb_cocycle(const Section& s) {
  detail::require_generic(s);
  const RatMatrix winf = wronskian_matrix(section_transfer(s)).compose(detail::inversion());
  return {solve(winf, wronskian_matrix(s.a0))};
}

/// W(A_inf ∘ (1/z))^-1 W(A0): both Wronskians differentiated in the single
/// overlap coordinate z.
inline WvbCocycle overlap_cocycle(const Section& s) {
  detail::require_generic(s);
  const VecSection inf_in_z = section_transfer(s).compose(detail::inversion());
  return {quotient(s.a0, inf_in_z)};
}

struct CoboundaryCertificate {
  RatFunc f;
  Divisor divisor_difference;  // div(A) - div(B)
  RatMatrix lhs;               // overlap cocycle of A
  RatMatrix rhs;               // (fB/A)_inf · cocycle of B · (A/fB)_0
  bool det_match_a = false;
  bool det_match_b = false;

  bool residual_zero() const { return lhs == rhs; }
  bool passed() const { return residual_zero() && det_match_a && det_match_b; }
};

/// Checks Φ^A = (fB/A)_inf · Φ^B · (A/fB)_0 when div(A) - div(B) = div(f^n).
/// Without `f`, searches for it with is_nth_power.
inline CoboundaryCertificate coboundary_check(const Section& sa, const Section& sb, std::optional<RatFunc> f = std::nullopt) {
  if (!(sa.bundle == sb.bundle)) throw std::invalid_argument("sections live on different bundles");
  detail::require_generic(sa);
  detail::require_generic(sb);
  const long n = static_cast<long>(sa.bundle.rank());
  CoboundaryCertificate cert;
  cert.divisor_difference = global_wronskian_divisor(sa) - global_wronskian_divisor(sb);
  if (f) {
    if (f->is_zero() || !(divisor_of(f->pow(n)) == cert.divisor_difference))
      throw DivisorMismatchError("div(f^n) does not equal div(A) - div(B)");
  } else {
    f = is_nth_power(cert.divisor_difference, n);
    if (!f) throw DivisorMismatchError("div(A) - div(B) is not the divisor of an n-th power");
  }
  cert.f = *f;

  const RatFunc inv = detail::inversion();
  const VecSection fb0 = sb.a0.scaled(cert.f);
  const VecSection fb_inf = section_transfer(sb).scaled(cert.f.compose(inv));
  const RatMatrix q0 = quotient(sa.a0, fb0);
  const RatMatrix q_inf = quotient(fb_inf, section_transfer(sa)).compose(inv);

  cert.lhs = overlap_cocycle(sa).phi;
  cert.rhs = q_inf * overlap_cocycle(sb).phi * q0;
  cert.det_match_a = det(wvb_cocycle(sa).phi) == wronskian_transition(sa);
  cert.det_match_b = det(wvb_cocycle(sb).phi) == wronskian_transition(sb);
  return cert;
}

/// d log λ_{0,inf} = p1^0 - p1^inf on the overlap, as 1-forms in the z chart.
struct ChernCertificate {
  RatFunc p1_zero;     // coefficient of dz
  RatFunc p1_inf;      // coefficient of dw, in w
  RatFunc transition;  // λ_{0,inf}(z)
  MeroForm lhs;        // p1^0 dz - pullback(p1^inf dw)
  MeroForm rhs;        // d log λ
  MeroForm residual;

  bool passed() const { return residual.is_zero(); }
};

inline ChernCertificate chern_cocycle_check(const Section& s) {
  detail::require_generic(s);
  ChernCertificate c;
  c.p1_zero = ode_coefficients(s.a0).p[0];
  c.p1_inf = ode_coefficients(section_transfer(s)).p[0];
  c.transition = wronskian_transition(s);
  const MeroForm p0{Chart::zero, c.p1_zero};
  const MeroForm pinf{Chart::infinity, c.p1_inf};
  c.lhs = p0 - pinf.to_chart(Chart::zero);
  c.rhs = {Chart::zero, c.transition.derivative() / c.transition};
  c.residual = c.lhs - c.rhs;
  return c;
}

}  // namespace wronsk

#endif  // WRONSK_BUNDLE_HPP
