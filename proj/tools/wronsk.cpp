#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wronsk.hpp"

using json = nlohmann::ordered_json;
using namespace wronsk;

namespace {

enum class Format { text, structured };

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

json to_json(const Rat& r) { return r.get_str(); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const RatFunc& r) { return {{"text", r.to_string()}, {"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const VecSection& s) {
  json a = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) a.push_back(s[i].to_string());
  return a;
}

json to_json(const Divisor& d) {
  json finite = json::array();
  for (const auto& t : d.finite_part()) finite.push_back({{"point", to_json(t.point)}, {"multiplicity", t.multiplicity}});
  return {{"text", d.to_string()}, {"finite", finite}, {"inf_mult", d.inf_mult()}, {"degree", d.degree()}};
}

json to_json(const MeroForm& f) { return {{"chart", chart_name(f.chart)}, {"coeff", f.coeff.to_string()}}; }

json to_json(const PFBundle& v) {
  return {{"spec", v.to_string()}, {"rank", v.rank()}, {"k", v.k()}, {"c", to_json(v.c())}, {"T", to_json(v.t())["entries"]}};
}

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Emits one document per invocation.
class Report {
 public:
  explicit Report(Format f) : format_(f) {}

  Format format() const { return format_; }
  json& doc() { return doc_; }
  std::ostringstream& text() { return text_; }

  int finish(int code) {
    if (format_ == Format::structured) {
      doc_["exit_code"] = code;
      std::cout << doc_.dump(2) << "\n";
    } else {
      std::cout << text_.str();
    }
    return code;
  }

 private:
  Format format_;
  json doc_ = json::object();
  std::ostringstream text_;
};

VecSection parse_section(const std::string& text) { return VecSection(parse_ratfunc_list(text)); }

PFBundle load_bundle(const std::string& spec, const std::string& spec_file) {
  if (!spec.empty() && !spec_file.empty()) throw std::invalid_argument("give either --spec or --spec-file, not both");
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw std::invalid_argument("cannot read spec file '" + spec_file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string body = ss.str();
    for (char& ch : body)
      if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
    return parse_bundle_spec(body);
  }
  if (spec.empty()) throw std::invalid_argument("a bundle needs --spec or --spec-file");
  return parse_bundle_spec(spec);
}

// Supplied probes, or `count` seeded generic probes.
std::vector<Section> load_probes(const PFBundle& v, const std::vector<std::string>& texts, std::size_t count,
                                 std::uint64_t seed) {
  std::vector<Section> out;
  for (const auto& t : texts) out.emplace_back(v, parse_section(t));
  if (out.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(trial_seed(seed, "probe", i));
      out.push_back(random_generic_probe(rng, v, 2, 3));
    }
  }
  return out;
}

json probes_json(const std::vector<Section>& probes) {
  json a = json::array();
  for (const auto& p : probes) a.push_back(to_json(p.a0));
  return a;
}

struct Options {
  std::string sections;
  std::string a_text, b_text, f_text;
  std::string matrix_text;
  std::string expr;
  std::string spec, spec_file;
  std::vector<std::string> probes;
  std::size_t probe_count = 2;
  long twist = 1;
  SuiteConfig verify;
};

int cmd_matrix(const Options& o, Report& r) {
  const VecSection a = parse_section(o.sections);
  const RatMatrix w = wronskian_matrix(a);
  const RatFunc d = det(w);
  r.doc() = {{"command", "matrix"}, {"section", to_json(a)}, {"wronskian", to_json(w)}, {"det", to_json(d)},
             {"generic", !d.is_zero()}};
  r.text() << "W(A) =\n" << indent(w.to_string(), "  ") << "w(A) = " << d << "\n"
           << "generic: " << yes_no(!d.is_zero()) << "\n";
  return kOk;
}

int cmd_quotient(const Options& o, Report& r) {
  const VecSection a = parse_section(o.a_text);
  const VecSection b = parse_section(o.b_text);
  const RatMatrix q = quotient(a, b);
  const RatFunc d = det(q);
  const std::size_t drank = rank(q.derivative());
  r.doc() = {{"command", "quotient"}, {"A", to_json(a)}, {"B", to_json(b)}, {"quotient", to_json(q)},
             {"det", to_json(d)}, {"derivative_rank", drank}};
  r.text() << "A/B = W(B)^-1 W(A) =\n" << indent(q.to_string(), "  ") << "det(A/B) = " << d << "\n"
           << "rank d(A/B) = " << drank << "\n";
  return kOk;
}

int cmd_ode(const Options& o, Report& r) {
  const VecSection a = parse_section(o.sections);
  const OdeCoeffs ode = ode_coefficients(a);
  const AbelCertificate cert = abel_check(a);
  json p = json::array();
  for (const auto& c : ode.p) p.push_back(to_json(c));
  r.doc() = {{"command", "ode"},
             {"section", to_json(a)},
             {"order", ode.order},
             {"p", p},
             {"abel", {{"p1", to_json(cert.p1)}, {"w", to_json(cert.w)}, {"w_prime", to_json(cert.w_prime)},
                       {"residual", to_json(cert.residual)}, {"passed", cert.passed()}}}};
  auto& t = r.text();
  t << "y^(" << ode.order << ") = ";
  for (std::size_t k = 0; k < ode.order; ++k) {
    if (k) t << " + ";
    t << "p" << k + 1 << " y^(" << ode.order - 1 - k << ")";
  }
  t << "\n";
  for (std::size_t k = 0; k < ode.order; ++k) t << "  p" << k + 1 << " = " << ode.p[k] << "\n";
  t << "Abel: w' = p1 w\n"
    << "  p1       = " << cert.p1 << "\n"
    << "  w        = " << cert.w << "\n"
    << "  w'       = " << cert.w_prime << "\n"
    << "  residual = " << cert.residual << "\n";
  return cert.passed() ? kOk : kCheckFailed;
}

int cmd_liouville(const Options& o, Report& r) {
  const RatMatrix m = RatMatrix::from_rows(parse_nested_rows(o.matrix_text));
  const LiouvilleCertificate cert = liouville_check(m);
  r.doc() = {{"command", "liouville"}, {"matrix", to_json(m)}, {"trace_side", to_json(cert.trace_side)},
             {"dlog_det", to_json(cert.dlog_det)}, {"residual", to_json(cert.residual)}, {"passed", cert.passed()}};
  r.text() << "Tr(M^-1 M') = " << cert.trace_side << "\n"
           << "(det M)'/det M = " << cert.dlog_det << "\n"
           << "residual = " << cert.residual << "\n";
  return cert.passed() ? kOk : kCheckFailed;
}

int cmd_divisor(const Options& o, Report& r) {
  const RatFunc f = parse_ratfunc(o.expr);
  const Divisor d = divisor_of(f);
  r.doc() = {{"command", "divisor"}, {"function", to_json(f)}, {"divisor", to_json(d)}};
  r.text() << d.to_string() << "\n" << "degree " << d.degree() << "\n";
  return kOk;
}

int cmd_bundle_report(const Options& o, Report& r, std::uint64_t seed) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const std::vector<Section> probes = load_probes(v, o.probes, o.probe_count, seed);
  const QuestionReport q = open_question_report(v, probes);
  r.doc() = {{"command", "bundle report"},
             {"bundle", to_json(v)},
             {"probes", probes_json(probes)},
             {"deg_w", q.deg_w},
             {"deg_det", q.deg_det},
             {"canonical_term", q.canonical_term},
             {"verdict", q.verdict ? "equal" : "not equal"},
             {"probes_used", q.probes_used},
             {"scope", q.scope}};
  r.text() << "bundle: " << v.to_string() << "\n"
           << "deg w(V)                  = " << q.deg_w << "\n"
           << "deg det V                 = " << q.deg_det << "\n"
           << "(n(n-1)/2) deg K          = " << q.canonical_term << "\n"
           << "verdict                   : " << (q.verdict ? "equal" : "not equal") << "\n"
           << "probes used               : " << q.probes_used << "\n"
           << "scope: " << q.scope << "\n";
  return q.verdict ? kOk : kCheckFailed;
}

int cmd_bundle_degree(const Options& o, Report& r, std::uint64_t seed) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const std::vector<Section> probes = load_probes(v, o.probes, o.probe_count, seed);
  const LineBundleDegree lb = wronskian_line_bundle_degree_detail(v, probes);
  json divs = json::array();
  for (const auto& d : lb.divisors) divs.push_back(to_json(d));
  r.doc() = {{"command", "bundle degree"}, {"bundle", to_json(v)}, {"probes", probes_json(probes)},
             {"deg_w", lb.degree}, {"divisors", divs}, {"probes_used", lb.probes_used}};
  r.text() << "bundle: " << v.to_string() << "\n";
  std::size_t i = 0;
  for (const auto& p : probes) {
    if (!is_generic_section(p)) {
      r.text() << "probe (" << p.a0.to_string() << "): not generic, skipped\n";
      continue;
    }
    r.text() << "probe (" << p.a0.to_string() << "): div w = " << lb.divisors[i++].to_string() << "\n";
  }
  r.text() << "deg w(V) = " << lb.degree << "\n";
  return kOk;
}

int cmd_bundle_twist(const Options& o, Report& r, std::uint64_t seed) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const std::vector<Section> probes = load_probes(v, o.probes, o.probe_count, seed);
  const TwistCertificate c = tensor_twist_degree_check(v, o.twist, probes);
  r.doc() = {{"command", "bundle twist"}, {"bundle", to_json(v)}, {"d", c.d}, {"deg_w", c.deg_w},
             {"deg_w_twisted", c.deg_w_twisted}, {"expected", c.expected}, {"passed", c.passed()}};
  r.text() << "deg w(V)        = " << c.deg_w << "\n"
           << "deg w(V(" << c.d << "))    = " << c.deg_w_twisted << "\n"
           << "deg w(V) + n d  = " << c.expected << "\n"
           << "twist law: " << (c.passed() ? "holds" : "FAILS") << "\n";
  return c.passed() ? kOk : kCheckFailed;
}

int cmd_bundle_chern(const Options& o, Report& r, std::uint64_t seed) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const Section s = load_probes(v, o.probes, 1, seed).front();
  const ChernCertificate c = chern_cocycle_check(s);
  r.doc() = {{"command", "bundle chern"}, {"bundle", to_json(v)}, {"section", to_json(s.a0)},
             {"p1_zero", to_json(c.p1_zero)}, {"p1_inf", to_json(c.p1_inf)}, {"transition", to_json(c.transition)},
             {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"residual", to_json(c.residual)},
             {"passed", c.passed()}};
  r.text() << "A0 = (" << s.a0.to_string() << ")\n"
           << "p1^0 (in z)        = " << c.p1_zero << "\n"
           << "p1^inf (in w)      = " << c.p1_inf.to_string('w') << "\n"
           << "lambda_0inf        = " << c.transition << "\n"
           << "p1^0 - p1^inf      = (" << c.lhs.coeff << ") dz\n"
           << "d log lambda       = (" << c.rhs.coeff << ") dz\n"
           << "residual           = " << c.residual.coeff << "\n";
  return c.passed() ? kOk : kCheckFailed;
}

int cmd_bundle_cocycle(const Options& o, Report& r, std::uint64_t seed) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const Section s = load_probes(v, o.probes, 1, seed).front();
  const WvbCocycle native = wvb_cocycle(s);
  const WvbCocycle overlap = overlap_cocycle(s);
  const RatFunc d = det(native.phi);
  const RatFunc lam = wronskian_transition(s);
  const bool match = d == lam;
  r.doc() = {{"command", "bundle cocycle"}, {"bundle", to_json(v)}, {"section", to_json(s.a0)},
             {"native", to_json(native.phi)}, {"overlap", to_json(overlap.phi)}, {"det", to_json(d)},
             {"transition", to_json(lam)}, {"det_match", match}};
  r.text() << "W(A_inf)^-1 W(A_0), chart coordinates =\n" << indent(native.phi.to_string(), "  ")
           << "W(A_inf(1/z))^-1 W(A_0), overlap coordinate =\n" << indent(overlap.phi.to_string(), "  ")
           << "det = " << d << "\n"
           << "w transition = " << lam << "\n"
           << "det match: " << yes_no(match) << "\n";
  return match ? kOk : kCheckFailed;
}

int cmd_bundle_coboundary(const Options& o, Report& r) {
  const PFBundle v = load_bundle(o.spec, o.spec_file);
  const Section a(v, parse_section(o.a_text));
  const Section b(v, parse_section(o.b_text));
  std::optional<RatFunc> f;
  if (!o.f_text.empty()) f = parse_ratfunc(o.f_text);
  const CoboundaryCertificate c = coboundary_check(a, b, f);
  r.doc() = {{"command", "bundle coboundary"}, {"bundle", to_json(v)}, {"A", to_json(a.a0)}, {"B", to_json(b.a0)},
             {"f", to_json(c.f)}, {"f_supplied", f.has_value()},
             {"divisor_difference", to_json(c.divisor_difference)}, {"lhs", to_json(c.lhs)},
             {"rhs", to_json(c.rhs)}, {"residual_zero", c.residual_zero()}, {"det_match_a", c.det_match_a},
             {"det_match_b", c.det_match_b}, {"passed", c.passed()}};
  r.text() << "div(A) - div(B) = " << c.divisor_difference.to_string() << "\n"
           << "f = " << c.f << (f ? "" : " (found)") << "\n"
           << "cocycle of A =\n" << indent(c.lhs.to_string(), "  ")
           << "(fB/A)_inf cocycle of B (A/fB)_0 =\n" << indent(c.rhs.to_string(), "  ")
           << "residual zero: " << yes_no(c.residual_zero()) << "\n"
           << "det match: " << yes_no(c.det_match_a && c.det_match_b) << "\n";
  return c.passed() ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, Report& r) {
  const std::vector<SuiteResult> results = run_verify(o.verify);
  const SuiteConfig& cfg = o.verify;
  bool ok = true;
  json suites = json::array();
  for (const auto& s : results) {
    ok = ok && s.ok();
    json failures = json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"check", f.check}, {"detail", f.detail}});
    suites.push_back({{"name", s.name}, {"trials", s.trials}, {"checks", s.checks}, {"passed", s.passed},
                      {"failed", s.failures.size()}, {"failures", failures}});
    r.text() << s.name << ": " << s.trials << " trials, " << s.checks << " checks, " << s.passed << " passed, "
             << s.failures.size() << " failed\n";
    for (const auto& f : s.failures)
      r.text() << "  FAIL trial " << f.trial << " (seed " << f.seed << ") " << f.check
               << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
  }
  r.doc() = {{"command", "verify"},
             {"config", {{"suite", cfg.suite}, {"trials", cfg.trials}, {"seed", cfg.seed},
                         {"max_degree", cfg.max_degree}, {"max_rank", cfg.max_rank}, {"bound", cfg.bound}}},
             {"suites", suites},
             {"passed", ok}};
  r.text() << (ok ? "all checks passed" : "FAILURES") << "\n";
  return ok ? kOk : kCheckFailed;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const NotGenericError*>(&e)) return "not_generic";
  if (dynamic_cast<const DivisorMismatchError*>(&e)) return "divisor_mismatch";
  if (dynamic_cast<const ProbeError*>(&e)) return "probe";
  if (dynamic_cast<const SingularMatrixError*>(&e)) return "singular";
  if (dynamic_cast<const ZeroDivisionError*>(&e)) return "zero_division";
  if (dynamic_cast<const ConstantMapError*>(&e)) return "constant_map";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  return "invalid_input";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wronskian calculus over Q(z) and projectively flat bundles on P^1"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Master seed for generated probes and verify suites")
      ->envname("WRONSK_SEED")
      ->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "Wronskian matrix, determinant and genericity");
  matrix->add_option("-s,--section", o.sections, "Comma-separated components, e.g. \"1, z, z^2\"")->required();

  auto* quot = app.add_subcommand("quotient", "Wronskian quotient W(B)^-1 W(A)");
  quot->add_option("-a", o.a_text, "Section A")->required();
  quot->add_option("-b", o.b_text, "Section B (generic)")->required();

  auto* ode = app.add_subcommand("ode", "ODE coefficients and the Abel certificate");
  ode->add_option("-s,--section", o.sections, "Generic section")->required();

  auto* liou = app.add_subcommand("liouville", "Liouville certificate for an invertible matrix");
  liou->add_option("-m,--matrix", o.matrix_text, "Matrix as [[..],[..]]")->required();

  auto* divisor = app.add_subcommand("divisor", "Divisor of a rational function on P^1");
  divisor->add_option("-r,--ratfunc", o.expr, "Rational function")->required();

  auto* bundle = app.add_subcommand("bundle", "Two-chart projectively flat bundles");
  bundle->require_subcommand(1);
  auto add_bundle_opts = [&](CLI::App* sub, bool probes) {
    sub->add_option("--spec", o.spec, "Bundle, e.g. \"rank=2 k=1 c=3 T=[[1,1],[0,1]]\"");
    sub->add_option("--spec-file", o.spec_file, "File holding the bundle text format");
    if (probes) {
      sub->add_option("--probe", o.probes, "Chart-0 section (repeatable); generated from the seed if absent");
      sub->add_option("--probes", o.probe_count, "Number of generated probes")->capture_default_str();
    }
  };
  auto* report = bundle->add_subcommand("report", "deg w(V) against deg det V + (n(n-1)/2) deg K");
  add_bundle_opts(report, true);
  auto* bdeg = bundle->add_subcommand("degree", "Global Wronskian divisors and deg w(V)");
  add_bundle_opts(bdeg, true);
  auto* twist = bundle->add_subcommand("twist", "Twist law for V(d)");
  add_bundle_opts(twist, true);
  twist->add_option("-d", o.twist, "Twist degree")->capture_default_str();
  auto* chern = bundle->add_subcommand("chern", "Two-chart Chern cocycle check");
  add_bundle_opts(chern, true);
  auto* cocycle = bundle->add_subcommand("cocycle", "Wronskian vector bundle cocycle");
  add_bundle_opts(cocycle, true);
  auto* cob = bundle->add_subcommand("coboundary", "Coboundary check for two generic sections");
  add_bundle_opts(cob, false);
  cob->add_option("-a", o.a_text, "Section A")->required();
  cob->add_option("-b", o.b_text, "Section B")->required();
  cob->add_option("-f", o.f_text, "f with div(f^n) = div(A) - div(B); searched for if absent");

  auto* verify = app.add_subcommand("verify", "Seeded property suites");
  verify->add_option("--suite", o.verify.suite, "Suite name or all")->capture_default_str();
  verify->add_option("--trials", o.verify.trials)->capture_default_str();
  verify->add_option("--max-degree", o.verify.max_degree)->capture_default_str();
  verify->add_option("--max-rank", o.verify.max_rank)->capture_default_str();
  verify->add_option("--bound", o.verify.bound, "Coefficient bound")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Report r(format == "structured" ? Format::structured : Format::text);
  o.verify.seed = seed;
  try {
    if (*matrix) return r.finish(cmd_matrix(o, r));
    if (*quot) return r.finish(cmd_quotient(o, r));
    if (*ode) return r.finish(cmd_ode(o, r));
    if (*liou) return r.finish(cmd_liouville(o, r));
    if (*divisor) return r.finish(cmd_divisor(o, r));
    if (*report) return r.finish(cmd_bundle_report(o, r, seed));
    if (*bdeg) return r.finish(cmd_bundle_degree(o, r, seed));
    if (*twist) return r.finish(cmd_bundle_twist(o, r, seed));
    if (*chern) return r.finish(cmd_bundle_chern(o, r, seed));
    if (*cocycle) return r.finish(cmd_bundle_cocycle(o, r, seed));
    if (*cob) return r.finish(cmd_bundle_coboundary(o, r));
    if (*verify) return r.finish(cmd_verify(o, r));
  } catch (const std::exception& e) {
    const auto* pe = dynamic_cast<const ParseError*>(&e);
    if (r.format() == Format::structured) {
      json err = {{"kind", error_kind(e)}, {"message", e.what()}};
      if (pe) err["position"] = pe->position();
      std::cout << json{{"error", err}, {"exit_code", kInputError}}.dump(2) << "\n";
    } else {
      std::cerr << "error (" << error_kind(e) << "): " << e.what() << "\n";
    }
    return kInputError;
  }
  return kInputError;
}
