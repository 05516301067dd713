#include "catalog_util.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qcontig {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::pattern: return "pattern";
    case Family::two_term: return "two_term";
    case Family::three_term: return "three_term";
    case Family::proposition: return "proposition";
    case Family::corollary_classical: return "corollary_classical";
  }
  return "?";
}

std::string_view to_string(Side s) { return s == Side::q ? "q" : "classical"; }

std::string_view to_string(FactorKind k) {
  switch (k) {
    case FactorKind::unity: return "unity";
    case FactorKind::rational: return "rational";
    case FactorKind::qpoch_infinite_ratio: return "qpoch_infinite_ratio";
    case FactorKind::gamma_ratio: return "gamma_ratio";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::pattern, Family::two_term, Family::three_term, Family::proposition,
                   Family::corollary_classical})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

bool id_less(std::string_view x, std::string_view y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const bool dx = std::isdigit(static_cast<unsigned char>(x[i]));
    const bool dy = std::isdigit(static_cast<unsigned char>(y[j]));
    if (dx && dy) {
      unsigned long u = 0, v = 0;
      auto rx = std::from_chars(x.data() + i, x.data() + x.size(), u);
      auto ry = std::from_chars(y.data() + j, y.data() + y.size(), v);
      if (u != v) return u < v;
      i = static_cast<std::size_t>(rx.ptr - x.data());
      j = static_cast<std::size_t>(ry.ptr - y.data());
      continue;
    }
    if (x[i] != y[j]) return x[i] < y[j];
    ++i;
    ++j;
  }
  return x.size() - i < y.size() - j;
}

namespace {

// Nominal point for the label-recording dry run; values never matter there.
ParamSet<cplx> nominal_point() {
  ParamSet<cplx> p;
  const cplx v[] = {{0.31, 0.12}, {0.27, -0.2}, {0.44, 0.05}, {0.52, 0.3},
                    {0.36, -0.11}, {0.4, 0.1}, {0.6, -0.2}, {0.35, 0.25}};
  for (std::size_t i = 0; i < 8; ++i) p.set(static_cast<Param>(i), v[i]);
  p.q = 0.5;
  return p;
}

std::vector<Relation> build() {
  std::vector<Relation> all;
  catalog::add_patterns(all);
  catalog::add_two_term(all);
  catalog::add_three_term(all);
  catalog::add_propositions(all);

  const ParamSet<cplx> nominal = nominal_point();
  for (Relation& r : all) {
    Builder<cplx> b = run_builder(r, nominal, PrecisionPolicy::standard(), BuildMode::record);
    r.constraints = b.recorded();
    if (r.side == Side::classical && r.ranges.empty()) {
      for (Param p : r.free_params) {
        const bool lower = p == Param::b || p == Param::d;
        r.ranges.push_back({p, lower ? 7.0 : 0.2, lower ? 14.0 : 2.5});
      }
    }
    // shared boxes may name parameters this relation does not use
    std::erase_if(r.ranges, [&r](const SampleRange& sr) {
      return std::find(r.free_params.begin(), r.free_params.end(), sr.param) == r.free_params.end();
    });
  }
  std::sort(all.begin(), all.end(),
            [](const Relation& x, const Relation& y) { return id_less(x.id, y.id); });
  return all;
}

}  // namespace

const std::vector<Relation>& registry() {
  static const std::vector<Relation> all = build();
  return all;
}

const Relation& find_relation(std::string_view id) {
  for (const Relation& r : registry())
    if (r.id == id) return r;
  throw UnknownRelation("unknown relation id '" + std::string(id) + "'");
}

std::vector<std::string> relation_ids() {
  std::vector<std::string> ids;
  for (const Relation& r : registry()) ids.push_back(r.id);
  return ids;
}

Instantiated<cplx> instantiate(std::string_view id, const ParamSet<cplx>& p,
                               const PrecisionPolicy& policy, const Mutation* mutation) {
  return instantiate<cplx>(find_relation(id), p, policy, mutation);
}

}  // namespace qcontig
