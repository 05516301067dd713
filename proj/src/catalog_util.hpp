#pragma once

#include <qcontig/patterns.hpp>
#include <qcontig/relations.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qcontig::catalog {

using P = Param;

template <class Body>
Relation& add_q(std::vector<Relation>& out, std::string id, Family family,
                std::vector<Param> params, std::string anchor, Body body) {
  Relation r;
  r.id = std::move(id);
  r.family = family;
  r.side = Side::q;
  r.free_params = std::move(params);
  r.paper_anchor = std::move(anchor);
  r.eval = Evaluators{BuildFn<cplx>(body), BuildFn<cplx34>(body), BuildFn<cplx50>(body),
                      BuildFn<cplx100>(body)};
  out.push_back(std::move(r));
  return out.back();
}

// Classical bodies only run in standard precision.
template <class Body>
Relation& add_classical(std::vector<Relation>& out, std::string q_id, std::vector<Param> params,
                        std::string anchor, Body body) {
  Relation r;
  r.id = "cor-" + q_id;
  r.counterpart = std::move(q_id);
  r.family = Family::corollary_classical;
  r.side = Side::classical;
  r.free_params = std::move(params);
  r.paper_anchor = std::move(anchor);
  r.eval.standard = BuildFn<cplx>(body);
  out.push_back(std::move(r));
  return out.back();
}

// Parameter map into a parent relation; entries are (parent parameter, value).
template <class Fn>
void set_parent(Relation& r, std::string parent, Fn fn) {
  r.parent = std::move(parent);
  r.to_parent = [fn](const ParamSet<cplx>& p) {
    ParamSet<cplx> out;
    out.q = p.q;
    for (const auto& [param, value] : fn(p, p.q)) out.set(param, value);
    return out;
  };
}

void add_patterns(std::vector<Relation>& out);
void add_two_term(std::vector<Relation>& out);
void add_three_term(std::vector<Relation>& out);
void add_propositions(std::vector<Relation>& out);

}  // namespace qcontig::catalog
