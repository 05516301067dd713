#include <qcontig/report.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace qcontig {

namespace {

// JSON has no infinities; they only occur as "no usable sample".
json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json to_json(const cplx& z) { return json::array({number(z.real()), number(z.imag())}); }

json to_json(const ParamSet<cplx>& p) {
  json out = json::object();
  for (std::size_t i = 0; i < kParamNames.size(); ++i)
    if (p.present.test(i)) out[std::string(kParamNames[i])] = to_json(p.values[i]);
  out["q"] = to_json(p.q);
  return out;
}

json to_json(const PrecisionPolicy& p) {
  return {{"mode", p.mode == PrecisionMode::standard ? "standard" : "extended"},
          {"decimal_digits", p.decimal_digits},
          {"tol", p.tol},
          {"max_terms", p.max_terms}};
}

json to_json(const Relation& r) {
  json params = json::array();
  for (Param p : r.free_params) params.push_back(std::string(name_of(p)));
  json out = {{"id", r.id},
              {"family", std::string(to_string(r.family))},
              {"side", std::string(to_string(r.side))},
              {"free_params", params},
              {"constraints", r.constraints},
              {"paper_anchor", r.paper_anchor},
              {"notes", r.notes}};
  if (!r.parent.empty()) out["parent"] = r.parent;
  if (!r.counterpart.empty()) out["counterpart"] = r.counterpart;
  return out;
}

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const FailureRecord& f : r.failures) {
    json item = {{"point", to_json(f.point)}, {"residual", number(f.residual)}};
    if (!f.error.empty()) item["error"] = f.error;
    failures.push_back(std::move(item));
  }
  return {{"relation_id", r.relation_id},
          {"side", std::string(to_string(r.side))},
          {"samples", r.samples},
          {"rejected", r.rejected},
          {"max_residual", number(r.max_residual)},
          {"mean_residual", number(r.mean_residual)},
          {"threshold", r.threshold},
          {"pass", r.pass()},
          {"policy", to_json(r.policy)},
          {"failures", failures}};
}

json to_json(const LimitReport& r) {
  json gaps = json::array();
  for (double g : r.coefficient_gaps) gaps.push_back(number(g));
  return {{"pair", {r.q_relation_id, r.classical_id}},
          {"exponent_assignment", r.exponent_assignment},
          {"epsilons", r.epsilons},
          {"coefficient_gaps", gaps},
          {"points", r.points},
          {"decreasing", r.decreasing}};
}

json campaign_json(const std::vector<VerificationReport>& reports, const CampaignOptions& opt) {
  json rels = json::array();
  int failed = 0;
  for (const auto& r : reports) {
    rels.push_back(to_json(r));
    failed += !r.pass();
  }
  return {{"seed", opt.seed},
          {"q_samples", opt.q_samples},
          {"classical_samples", opt.classical_samples},
          {"policy", to_json(opt.policy)},
          {"relations", rels},
          {"summary",
           {{"relations", reports.size()}, {"failed", failed}, {"pass", failed == 0}}}};
}

std::string campaign_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "relation_id,samples,max_residual,pass\n";
  for (const auto& r : reports)
    out << r.relation_id << ',' << r.samples << ',' << format_double(r.max_residual) << ','
        << (r.pass() ? "true" : "false") << '\n';
  return out.str();
}

json catalog_json(const std::vector<const Relation*>& relations) {
  json out = json::array();
  for (const Relation* r : relations) out.push_back(to_json(*r));
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  fs::rename(tmp, path);
}

}  // namespace qcontig
