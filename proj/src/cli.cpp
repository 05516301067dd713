#include <qcontig/cli.hpp>
#include <qcontig/report.hpp>
#include <qcontig/series.hpp>
#include <qcontig/verify.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace qcontig {

namespace {

struct Parts {
  std::string re = "0", im = "0";
};

Parts split_complex(std::string_view text) {
  static const std::regex full(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)"
                               R"((?:([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, full) || (!m[1].matched && !m[2].matched))
    throw DomainViolation("cannot parse complex number '" + s + "'");
  Parts p;
  if (m[1].matched) p.re = m[1].str();
  if (m[2].matched) {
    std::string im = m[2].str();
    if (im == "+" || im == "-") im += "1";
    p.im = im;
  }
  return p;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (s.back() == ',') out.emplace_back();
  return out;
}

template <class C>
C make_scalar(const Parts& p) {
  if constexpr (std::is_same_v<C, cplx>) {
    return {std::stod(p.re), std::stod(p.im)};
  } else {
    using R = real_t<C>;
    return C(R(p.re), R(p.im));
  }
}

struct KindSpec {
  SeriesKind kind;
  int r = -1, s = -1;  // -1: any length
};

KindSpec parse_kind(const std::string& k) {
  static const std::regex counted(R"(^(\d+)(phi|F)(\d+)(\*?)$)");
  std::smatch m;
  if (std::regex_match(k, m, counted)) {
    const bool q = m[2] == "phi", star = m[4].length() > 0;
    const SeriesKind kind = q ? (star ? SeriesKind::q_phi_star : SeriesKind::q_phi)
                              : (star ? SeriesKind::classical_F_star : SeriesKind::classical_F);
    return {kind, std::stoi(m[1]), std::stoi(m[3])};
  }
  if (k == "phi" || k == "q_phi") return {SeriesKind::q_phi};
  if (k == "phi*" || k == "q_phi_star") return {SeriesKind::q_phi_star};
  if (k == "F" || k == "classical_F") return {SeriesKind::classical_F};
  if (k == "F*" || k == "classical_F_star") return {SeriesKind::classical_F_star};
  throw DomainViolation("--kind: unknown series kind '" + k + "'");
}

template <class R>
std::string show_real(const R& x, int digits) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

template <class C>
std::string show(const C& z, int digits) {
  const auto re = z.real(), im = z.imag();
  std::string s = show_real(re, digits);
  const bool neg = im < 0;
  s += neg ? " - " : " + ";
  s += show_real(neg ? decltype(im)(-im) : im, digits) + "i";
  return s;
}

template <class F>
decltype(auto) with_tier(const PrecisionPolicy& policy, F&& f) {
  if (policy.mode == PrecisionMode::standard) return f(cplx{});
  if (policy.decimal_digits <= 34) return f(cplx34{});
  if (policy.decimal_digits <= 50) return f(cplx50{});
  return f(cplx100{});
}

struct Global {
  std::string precision;
  int digits = 34;
  double tol = 0;
  long max_terms = 10000;
  std::string format = "text";

  PrecisionPolicy policy() const {
    PrecisionPolicy p = precision == "extended" ? PrecisionPolicy::extended(digits, tol, max_terms)
                                                : PrecisionPolicy::standard(tol > 0 ? tol : 1e-12, max_terms);
    p.validate();
    return p;
  }
};

struct EvalArgs {
  std::string kind, num, den, q, z;
};

int cmd_eval(const Global& g, const EvalArgs& a, std::ostream& out) {
  const PrecisionPolicy policy = g.policy();
  const KindSpec ks = parse_kind(a.kind);
  auto parts_of = [](const std::string& flag, const std::string& list) {
    std::vector<Parts> v;
    for (const std::string& item : split_list(list)) {
      try {
        v.push_back(split_complex(item));
      } catch (const DomainViolation& e) {
        throw DomainViolation(flag + ": " + e.what());
      }
    }
    return v;
  };
  const std::vector<Parts> num = parts_of("--num", a.num), den = parts_of("--den", a.den);
  if (ks.r >= 0 && (static_cast<int>(num.size()) != ks.r || static_cast<int>(den.size()) != ks.s))
    throw DomainViolation("--num/--den: " + a.kind + " needs " + std::to_string(ks.r) +
                          " numerators and " + std::to_string(ks.s) + " denominators");
  if (num.empty()) throw DomainViolation("--num: at least one numerator parameter is required");
  const bool qkind = is_q_kind(ks.kind);
  if (qkind && a.q.empty()) throw DomainViolation("--q: required for q-series");
  Parts qp, zp;
  try {
    if (qkind) qp = split_complex(a.q);
  } catch (const DomainViolation& e) {
    throw DomainViolation(std::string("--q: ") + e.what());
  }
  try {
    zp = split_complex(a.z);
  } catch (const DomainViolation& e) {
    throw DomainViolation(std::string("--z: ") + e.what());
  }

  return with_tier(policy, [&](auto tag) {
    using C = decltype(tag);
    auto conv = [](const std::vector<Parts>& v) {
      std::vector<C> r;
      for (const Parts& p : v) r.push_back(make_scalar<C>(p));
      return r;
    };
    const C q = qkind ? make_scalar<C>(qp) : C(0);
    if (qkind && !(mag2(q) < real_t<C>(1)))
      throw BaseOutOfDomain("--q: the base must satisfy |q| < 1");
    const SeriesSpec<C> spec{ks.kind, conv(num), conv(den), q, make_scalar<C>(zp)};
    const SeriesValue<C> v = eval_series(spec, policy);
    const int digits = std::min(policy.decimal_digits, 40);
    if (g.format == "json") {
      json j = {{"value", {to_double(v.value.real()), to_double(v.value.imag())}},
                {"value_text", show(v.value, digits)},
                {"terms_used", v.terms_used},
                {"tail_bound", v.tail_bound},
                {"converged", v.converged},
                {"policy", to_json(policy)}};
      out << j.dump(2) << '\n';
    } else {
      out << "value      " << show(v.value, digits) << '\n'
          << "terms_used " << v.terms_used << '\n'
          << "tail_bound " << std::setprecision(3) << v.tail_bound << '\n'
          << "converged  " << (v.converged ? "true" : "false") << '\n';
    }
    return v.converged ? kExitOk : kExitNotConverged;
  });
}

int cmd_list(const Global& g, const std::string& family, bool as_json, std::ostream& out) {
  std::vector<const Relation*> sel;
  const std::optional<Family> f = family.empty() ? std::nullopt : parse_family(family);
  for (const Relation& r : registry()) {
    if (!family.empty() && (!f || r.family != *f)) continue;
    sel.push_back(&r);
  }
  if (as_json || g.format == "json") {
    out << catalog_json(sel).dump(2) << '\n';
    return kExitOk;
  }
  for (const Relation* r : sel)
    out << std::left << std::setw(24) << r->id << std::setw(20) << to_string(r->family)
        << r->paper_anchor << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> relations;
  bool all = false;
  int samples = 50;
  int classical_samples = 20;
  std::uint64_t seed = 42;
  std::string report;
  unsigned jobs = 0;
};

int cmd_verify(const Global& g, const VerifyArgs& a, std::ostream& out,
               const std::optional<Mutation>& mutation) {
  if (a.all == !a.relations.empty())
    throw DomainViolation("verify: give either --relation ID (repeatable) or --all");
  if (a.samples < 1 || a.classical_samples < 1)
    throw DomainViolation("--samples: must be at least 1");
  std::vector<std::string> ids = a.all ? relation_ids() : a.relations;
  for (const std::string& id : ids) (void)find_relation(id);
  std::sort(ids.begin(), ids.end(), [](const auto& x, const auto& y) { return id_less(x, y); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  CampaignOptions opt;
  opt.seed = a.seed;
  opt.q_samples = a.samples;
  // an explicit relation list uses --samples throughout
  opt.classical_samples = a.all ? a.classical_samples : a.samples;
  opt.policy = g.policy();
  opt.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  opt.mutation = mutation;
  const std::vector<VerificationReport> reps = verify_campaign(ids, opt);

  std::string format = g.format;
  if (!a.report.empty() && format == "text")
    format = a.report.ends_with(".csv") ? "csv" : "json";
  const std::string body =
      format == "csv" ? campaign_csv(reps) : campaign_json(reps, opt).dump(2) + "\n";
  if (!a.report.empty()) write_atomic(a.report, body);

  int failed = 0;
  for (const auto& r : reps) failed += !r.pass();
  if (a.report.empty() && format != "text") {
    out << body;
  } else {
    for (const auto& r : reps) {
      out << std::left << std::setw(24) << r.relation_id << (r.pass() ? "PASS" : "FAIL")
          << "  samples=" << r.samples << "  max_residual=" << std::setprecision(3)
          << r.max_residual;
      if (!r.failures.empty() && !r.failures.front().error.empty())
        out << "  (" << r.failures.front().error << ")";
      out << '\n';
    }
    out << reps.size() - failed << "/" << reps.size() << " relations pass\n";
  }
  return failed ? kExitFailure : kExitOk;
}

struct LimitArgs {
  std::string pair;
  std::string eps = "1e-2,1e-3,1e-4";
  std::uint64_t seed = 42;
  int points = 8;
};

int cmd_limit(const Global& g, const LimitArgs& a, std::ostream& out) {
  const auto colon = a.pair.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == a.pair.size() ||
      a.pair.find(':', colon + 1) != std::string::npos)
    throw DomainViolation("--pair: expected QID:CID, got '" + a.pair + "'");
  std::vector<double> eps;
  for (const std::string& s : split_list(a.eps)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw DomainViolation("--eps: cannot parse '" + s + "'");
    eps.push_back(v);
  }
  if (a.points < 1) throw DomainViolation("--points: must be at least 1");
  const LimitReport r =
      limit_check(a.pair.substr(0, colon), a.pair.substr(colon + 1), eps, a.seed, a.points);
  if (g.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << r.q_relation_id << " -> " << r.classical_id << '\n';
    for (std::size_t i = 0; i < r.epsilons.size(); ++i)
      out << "  eps=" << std::setprecision(3) << r.epsilons[i]
          << "  gap=" << r.coefficient_gaps[i] << '\n';
    out << "decreasing " << (r.decreasing ? "true" : "false") << '\n';
  }
  return r.decreasing ? kExitOk : kExitFailure;
}

}  // namespace

cplx parse_complex(std::string_view text) { return make_scalar<cplx>(split_complex(text)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<Mutation>& mutation) {
  CLI::App app{"q-contiguous: basic hypergeometric series and their contiguous relations",
               "qcontig"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  if (const char* env = std::getenv("QCONTIG_PRECISION")) g.precision = env;
  app.add_option("--precision", g.precision, "standard or extended (env QCONTIG_PRECISION)");
  app.add_option("--digits", g.digits, "decimal digits in extended mode (30..100)");
  app.add_option("--tol", g.tol, "relative tolerance (default 1e-12, or 10^(5-digits) extended)");
  app.add_option("--max-terms", g.max_terms, "series term limit");
  app.add_option("--format", g.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate one series");
  eval->add_option("--kind", ea.kind, "e.g. 3phi2, 3phi2*, 3F2, 3F2*")->required();
  eval->add_option("--num", ea.num, "comma-separated numerator parameters")->required();
  eval->add_option("--den", ea.den, "comma-separated denominator parameters");
  eval->add_option("--q", ea.q, "base");
  eval->add_option("--z", ea.z, "argument")->required();

  std::string family;
  bool list_json = false;
  auto* list = app.add_subcommand("list", "list catalog entries");
  list->add_option("--family", family,
                   "pattern, two_term, three_term, proposition or corollary_classical");
  list->add_flag("--json", list_json, "emit JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "randomised verification of catalog relations");
  verify->add_option("--relation", va.relations, "relation id (repeatable)");
  verify->add_flag("--all", va.all, "every catalog entry");
  verify->add_option("--samples", va.samples, "samples per q relation (default 50)");
  verify->add_option("--classical-samples", va.classical_samples,
                     "samples per classical relation under --all (default 20)");
  verify->add_option("--seed", va.seed, "random seed (default 42)");
  verify->add_option("--report", va.report, "write a JSON or CSV report (by extension)");
  verify->add_option("--jobs", va.jobs, "worker threads (default: all cores)");

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "q -> 1 coefficient convergence");
  limit->add_option("--pair", la.pair, "QID:CID")->required();
  limit->add_option("--eps", la.eps, "decreasing list of epsilons (default 1e-2,1e-3,1e-4)");
  limit->add_option("--seed", la.seed, "random seed (default 42)");
  limit->add_option("--points", la.points, "sample points (default 8)");

  std::vector<const char*> argv{"qcontig"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g.precision.empty()) g.precision = "standard";
    if (g.precision != "standard" && g.precision != "extended")
      throw DomainViolation("--precision: expected standard or extended, got '" + g.precision + "'");
    if (*eval) return cmd_eval(g, ea, out);
    if (*list) return cmd_list(g, family, list_json, out);
    if (*verify) return cmd_verify(g, va, out, mutation);
    return cmd_limit(g, la, out);
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {  // includes filesystem errors from --report
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qcontig
