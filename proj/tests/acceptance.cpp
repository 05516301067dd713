// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <qcontig/report.hpp>
#include <qcontig/verify.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

using namespace qcontig;
namespace fs = std::filesystem;

namespace {

const PrecisionPolicy kStd = PrecisionPolicy::standard();

int shell_exit(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail_if(bool bad, const std::string& why) {
    if (bad) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

fs::path g_dir;
json g_report;  // the seed-42 campaign, shared by criteria 2, 5 and 10

Outcome census() {
  Outcome o;
  int q = 0, classical = 0;
  for (const Relation& r : registry()) {
    (r.side == Side::q ? q : classical)++;
    o.fail_if(r.paper_anchor.empty(), r.id + " has no anchor");
  }
  const fs::path out = g_dir / "list.json";
  const int code = shell_exit(std::string(QCONTIG_CLI_PATH) + " list --json > " + out.string());
  const json listed = json::parse(slurp(out));
  o.detail << "q=" << q << " classical=" << classical << " listed=" << listed.size();
  o.fail_if(code != 0, "list exit " + std::to_string(code));
  o.fail_if(q < 60, "fewer than 60 q-side relations");
  o.fail_if(classical < 40, "fewer than 40 classical corollaries");
  o.fail_if(listed.size() != registry().size(), "list --json disagrees with the registry");
  return o;
}

Outcome full_campaign() {
  Outcome o;
  const fs::path r1 = g_dir / "r1.json";
  const int code = shell_exit(std::string(QCONTIG_CLI_PATH) + " verify --all --seed 42 --report " +
                              r1.string() + " > " + (g_dir / "r1.txt").string());
  g_report = json::parse(slurp(r1));
  double worst = 0;
  std::string worst_id;
  int n = 0;
  for (const auto& r : g_report["relations"]) {
    if (r["side"] != "q") continue;
    ++n;
    const double m = r["max_residual"].is_null() ? INFINITY : r["max_residual"].get<double>();
    if (!(m <= worst)) worst = m, worst_id = r["relation_id"];
    o.fail_if(r["samples"] != 50, r["relation_id"].get<std::string>() + " sample count");
    o.fail_if(!r["pass"].get<bool>(), r["relation_id"].get<std::string>() + " fails");
  }
  o.detail << "exit=" << code << " q-relations=" << n << " max_residual=" << worst << " (" << worst_id << ")";
  o.fail_if(code != 0, "nonzero exit");
  o.fail_if(!(worst < 5e-12), "residual above 5e-12");
  return o;
}

Outcome sharpening() {
  Outcome o;
  for (const char* id : {"pattern-A-eq-a", "thm-3.4", "thm-4.1", "thm-4.12", "prop-4.2"}) {
    const auto s = verify_relation(id, 42, 50, kStd);
    const auto x = verify_relation(id, 42, 50, PrecisionPolicy::extended(34));
    const double ratio = s.max_residual / std::max(x.max_residual, 1e-300);
    o.detail << " " << id << ":" << s.max_residual << "->" << x.max_residual;
    o.fail_if(!x.pass(), std::string(id) + " fails in extended mode");
    o.fail_if(!(ratio >= 1e6), std::string(id) + " ratio below 1e6");
  }
  return o;
}

Outcome q_gauss() {
  Outcome o;
  Rng rng(42, "acceptance-q-gauss");
  double worst = 0;
  int done = 0, draws = 0;
  while (done < 100 && ++draws < 100000) {
    auto draw = [&] { return std::polar(rng.uniform(0.1, 0.9), rng.uniform(-std::numbers::pi, std::numbers::pi)); };
    const cplx a = draw(), b = draw(), c = draw(), q = rng.uniform(0.2, 0.8);
    const cplx z = c / (a * b);
    if (std::abs(z) > 0.9) continue;
    try {
      const auto v = eval_phi(make_phi<cplx>({a, b}, {c}, q, z), kStd);
      const std::array<cplx, 2> num{c / a, c / b}, den{c, z};
      const cplx rhs = qpoch_ratio_infinite<cplx>(num, den, q, kStd);
      if (!v.converged) continue;
      worst = std::max(worst, std::abs(v.value - rhs) / (std::abs(rhs) + 1));
      ++done;
    } catch (const Error&) {
    }
  }
  o.detail << "points=" << done << " max_residual=" << worst;
  o.fail_if(done < 100, "not enough admissible points");
  o.fail_if(!(worst < 5 * kStd.tol), "residual above 5 tol");
  return o;
}

Outcome classical_suite() {
  Outcome o;
  int n = 0;
  double worst = 0;
  for (const auto& r : g_report["relations"]) {
    if (r["side"] != "classical") continue;
    ++n;
    const double m = r["max_residual"].is_null() ? INFINITY : r["max_residual"].get<double>();
    worst = std::max(worst, m);
    o.fail_if(r["samples"] != 20, r["relation_id"].get<std::string>() + " sample count");
    o.fail_if(!(m < 1e-8), r["relation_id"].get<std::string>() + " above 1e-8");
  }
  o.detail << "corollaries=" << n << " max_residual=" << worst;
  o.fail_if(n < 40, "fewer than 40 corollaries");
  return o;
}

Outcome limits() {
  Outcome o;
  const std::vector<std::string> ids = {"pattern-A-eq-a", "pattern-B-eq-b", "pattern-C-eq-c",
                                        "pattern-D-eq-d", "thm-3.4",        "thm-4.1",
                                        "thm-4.3",        "thm-4.16"};
  for (const std::string& id : ids) {
    const LimitReport r = limit_check(id, "cor-" + id, {1e-2, 1e-3, 1e-4}, 42);
    const auto& g = r.coefficient_gaps;
    const double r1 = g[0] / g[1], r2 = g[1] / g[2];
    o.detail << " " << id << ":" << g[1];
    o.fail_if(!r.decreasing, id + " not decreasing");
    o.fail_if(!(r1 >= 5 && r1 <= 20 && r2 >= 5 && r2 <= 20), id + " ratio outside [5, 20]");
    o.fail_if(!(g[1] < 1e-2), id + " gap(1e-3) above 1e-2");
  }
  return o;
}

double ulps(std::span<const cplx> U, std::span<const cplx> V) {
  const double scale = abel_scale(U, V);
  return scale == 0 ? 0 : abel_check(U, V) / (std::numeric_limits<double>::epsilon() * scale);
}

Outcome abel() {
  Outcome o;
  Rng rng(42, "acceptance-abel");
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const int K = 1 + static_cast<int>(rng.uniform() * 64);
    std::vector<cplx> U(K + 2), V(K + 2);
    for (auto& u : U) u = std::polar(rng.uniform(0, 2), rng.uniform(-std::numbers::pi, std::numbers::pi));
    for (auto& v : V) v = std::polar(rng.uniform(0, 2), rng.uniform(-std::numbers::pi, std::numbers::pi));
    worst = std::max(worst, ulps(U, V));
  }
  o.detail << "random max=" << worst << "ulp";
  o.fail_if(!(worst <= 50), "random pairs above 50 ulp");

  const cplx q = 0.55, a(0.5, 0.1), b(0.35, -0.2), c(0.6, 0.2), d(0.3, 0.3), e(-0.4, 0.5);
  const cplx w = b * d / (q * a * c * e);
  auto qr = [&](std::initializer_list<cplx> num, std::initializer_list<cplx> den, long k) {
    return qpoch_ratio<cplx>(std::span<const cplx>(num.begin(), num.size()),
                             std::span<const cplx>(den.begin(), den.size()), q, k, kStd);
  };
  using Seq = std::function<cplx(long)>;
  const std::array<std::pair<Seq, Seq>, 4> pairs = {{
      {[&](long k) { return qr({q * a, d / a}, {q, d}, k); },
       [&](long k) { return qr({c, e}, {b, d / (q * a)}, k) * std::pow(w, double(k)); }},
      {[&](long k) { return qr({c, e}, {d / q, q * c * e / d}, k); },
       [&](long k) { return qr({a, q * q * c * e / d}, {q, b}, k) * std::pow(w, double(k)); }},
      {[&](long k) { return qr({q * c, q * e}, {q, q * c * e}, k); },
       [&](long k) { return qr({a, q * c * e}, {b, d}, k) * std::pow(w, double(k)); }},
      {[&](long k) { return qr({a, b * d / (q * q * a)}, {b / q, d / q}, k); },
       [&](long k) { return qr({c, e}, {q, b * d / (q * q * a)}, k) * std::pow(w, double(k)); }},
  }};
  double concrete = 0;
  for (const auto& [u, v] : pairs) {
    std::vector<cplx> U{0.0}, V;
    for (long k = 0; k <= 40; ++k) U.push_back(u(k));
    for (long k = 0; k <= 41; ++k) V.push_back(v(k));
    concrete = std::max(concrete, ulps(U, V));
  }
  o.detail << " pattern sequences max=" << concrete << "ulp";
  o.fail_if(!(concrete <= 50), "pattern sequences above 50 ulp");
  return o;
}

Outcome qpoch_properties() {
  Outcome o;
  Rng rng(42, "acceptance-qpoch");
  auto annulus = [&](double lo, double hi) {
    return std::polar(rng.uniform(lo, hi), rng.uniform(-std::numbers::pi, std::numbers::pi));
  };
  auto integer = [&](long lo, long hi) { return lo + static_cast<long>(rng.uniform() * (hi - lo + 1)); };
  double fe = 0, inv = 0, split = 0;
  int fe_n = 0, inv_n = 0;
  for (int i = 0; i < 1000; ++i) {
    const cplx x = annulus(0.1, 0.9), q = annulus(0.2, 0.9);
    const long n = integer(-10, 20), m = integer(-10, 20);
    try {
      const cplx lhs = qpoch_finite(x, q, n, kStd) * qpoch_finite(cplx(x * std::pow(q, double(n))), q, m, kStd);
      const cplx rhs = qpoch_finite(x, q, n + m, kStd);
      fe = std::max(fe, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      ++fe_n;
    } catch (const SingularFactor&) {
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const cplx x = annulus(0.1, 0.9), q = annulus(0.3, 0.9);
    const long n = integer(1, 15);
    try {
      const cplx v = qpoch_finite(x, q, -n, kStd) * qpoch_finite(cplx(x * std::pow(q, -double(n))), q, n, kStd);
      inv = std::max(inv, std::abs(v - 1.0));
      ++inv_n;
    } catch (const SingularFactor&) {
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const cplx x = annulus(0.1, 0.9), q = annulus(0.1, 0.9);
    const long N = integer(0, 50);
    const cplx whole = qpoch_infinite(x, q, kStd);
    const cplx parts = qpoch_finite(x, q, N, kStd) * qpoch_infinite(cplx(x * std::pow(q, double(N))), q, kStd);
    split = std::max(split, std::abs(whole - parts) / std::max(1.0, std::abs(whole)));
  }
  o.detail << "functional=" << fe << " (" << fe_n << ") inversion=" << inv << " (" << inv_n
           << ") split=" << split;
  o.fail_if(!(fe <= kStd.tol && inv <= kStd.tol && split <= kStd.tol), "above tol");
  o.fail_if(fe_n < 900 || inv_n < 900, "too many singular draws");
  return o;
}

Outcome mutation() {
  Outcome o;
  const fs::path rm = g_dir / "mutant.json";
  const int code = shell_exit(std::string(QCONTIG_MUTANT_PATH) + " verify --all --seed 42 --report " +
                              rm.string() + " > /dev/null");
  const json j = json::parse(slurp(rm));
  double affected = 0;
  int failing = 0;
  for (const auto& r : j["relations"]) {
    failing += !r["pass"].get<bool>();
    if (r["relation_id"] == "thm-4.1")
      affected = r["max_residual"].is_null() ? INFINITY : r["max_residual"].get<double>();
  }
  o.detail << "exit=" << code << " failing=" << failing << " thm-4.1 max_residual=" << affected;
  o.fail_if(code != 1, "mutant did not exit 1");
  o.fail_if(!(affected > 1e-3), "affected residual not above 1e-3");
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path r2 = g_dir / "r2.json";
  const int code = shell_exit(std::string(QCONTIG_CLI_PATH) + " verify --all --seed 42 --jobs 1 --report " +
                              r2.string() + " > /dev/null");
  const std::string a = slurp(g_dir / "r1.json"), b = slurp(r2);
  o.detail << "bytes=" << a.size() << "/" << b.size();
  o.fail_if(code != 0, "second run exit " + std::to_string(code));
  o.fail_if(a.empty() || a != b, "reports differ");
  return o;
}

}  // namespace

int main() {
  g_dir = fs::temp_directory_path() / ("qcontig-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  const std::array<std::pair<const char*, std::function<Outcome()>>, 10> criteria = {{
      {"catalog completeness", census},
      {"full q-catalog verification", full_campaign},
      {"extended-mode sharpening", sharpening},
      {"q-Gauss identity", q_gauss},
      {"classical corollary suite", classical_suite},
      {"q -> 1 limit", limits},
      {"finite Abel identity", abel},
      {"Pochhammer properties", qpoch_properties},
      {"mutation sensitivity", mutation},
      {"determinism", determinism},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  fs::remove_all(g_dir);
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
