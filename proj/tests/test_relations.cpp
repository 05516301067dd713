#include <qcontig/patterns.hpp>
#include <qcontig/relations.hpp>
#include <qcontig/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qcontig;

namespace {

const PrecisionPolicy kStd = PrecisionPolicy::standard();

ParamSet<cplx> point(std::initializer_list<std::pair<Param, cplx>> values, cplx q) {
  ParamSet<cplx> p;
  for (const auto& [k, v] : values) p.set(k, v);
  p.q = q;
  return p;
}

cplx series(const SeriesSpec<cplx>& s) {
  const auto v = eval_series(s, PrecisionPolicy::standard(1e-14));
  EXPECT_TRUE(v.converged);
  return v.value;
}

cplx rhs_sum(const Instantiated<cplx>& r) {
  cplx s = 0;
  for (const cplx& v : r.rhs_values) s += v;
  return s;
}

}  // namespace

TEST(Registry, Census) {
  int q = 0, classical = 0;
  for (const Relation& r : registry()) (r.side == Side::q ? q : classical)++;
  EXPECT_GE(q, 60);
  EXPECT_GE(classical, 40);
  EXPECT_GE(q + classical, 100);
}

TEST(Registry, EveryEntryHasAnchorConstraintsAndEvaluator) {
  std::set<std::string> ids;
  for (const Relation& r : registry()) {
    EXPECT_TRUE(ids.insert(r.id).second) << "duplicate id " << r.id;
    EXPECT_FALSE(r.paper_anchor.empty()) << r.id;
    EXPECT_FALSE(r.constraints.empty()) << r.id;
    EXPECT_FALSE(r.free_params.empty()) << r.id;
    EXPECT_TRUE(static_cast<bool>(r.eval.standard)) << r.id;
    if (r.side == Side::q) EXPECT_TRUE(static_cast<bool>(r.eval.d34)) << r.id;
  }
}

TEST(Registry, SortedByNumericAwareId) {
  const auto ids = relation_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end(), [](const auto& x, const auto& y) {
    return id_less(x, y);
  }));
  EXPECT_TRUE(id_less("thm-4.2", "thm-4.10"));
  EXPECT_FALSE(id_less("thm-4.10", "thm-4.2"));
}

TEST(Registry, PatternAShape) {
  const Relation& r = find_relation("pattern-A-eq-a");
  EXPECT_EQ(r.family, Family::pattern);
  const auto p = point({{Param::a, 0.8}, {Param::b, 0.3}, {Param::c, 0.8}, {Param::d, 0.3},
                        {Param::e, 0.8}},
                       0.5);
  const auto b = run_builder(r, p, kStd, BuildMode::evaluate);
  EXPECT_EQ(b.terms().size(), 2u);  // 1 lhs + 2 rhs
  EXPECT_TRUE(std::any_of(r.constraints.begin(), r.constraints.end(),
                          [](const std::string& c) { return c.find("bd/ace") != std::string::npos; }));
}

TEST(Registry, FamiliesAndCounterparts) {
  int patterns = 0;
  for (const Relation& r : registry()) {
    if (r.family == Family::pattern) ++patterns;
    if (r.side == Side::classical) {
      ASSERT_FALSE(r.counterpart.empty()) << r.id;
      EXPECT_EQ(find_relation(r.counterpart).side, Side::q) << r.id;
      EXPECT_EQ(r.ranges.size(), r.free_params.size()) << r.id;
    }
    if (!r.parent.empty()) {
      EXPECT_NO_THROW(find_relation(r.parent)) << r.id;
      EXPECT_TRUE(static_cast<bool>(r.to_parent)) << r.id;
    }
  }
  EXPECT_EQ(patterns, 8);
  EXPECT_EQ(find_relation("thm-3.4").family, Family::two_term);
  EXPECT_EQ(find_relation("thm-4.1").family, Family::three_term);
  EXPECT_EQ(find_relation("prop-4.2").family, Family::proposition);
  EXPECT_THROW(find_relation("thm-9.9"), UnknownRelation);
}

TEST(Registry, CorrectedClassicalFormsAreNoted) {
  EXPECT_NE(find_relation("thm-4.3").notes.find("correct"), std::string::npos);
  EXPECT_NE(find_relation("thm-4.8").notes.find("correct"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Pattern coefficients

TEST(PatternCoeffs, ADegeneratesOnTheBalancingSurface) {
  const cplx q = 0.5, a(0.4, 0.1), c = 0.3, e(0.6, -0.2), b = 0.7;
  const cplx d = q * a * c * e / b;  // bd = qace
  const auto k = pattern_coeffs(Pattern::A,
                                point({{Param::a, a}, {Param::b, b}, {Param::c, c}, {Param::d, d},
                                       {Param::e, e}},
                                      q),
                                Side::q);
  EXPECT_LT(std::abs(k.blackboard), 1e-15);
  EXPECT_LT(std::abs(k.fraktur), 1e-15);
}

TEST(PatternCoeffs, AScriptIsOneWhenCIsOne) {
  const auto k = pattern_coeffs(Pattern::A,
                                point({{Param::a, 0.4}, {Param::b, 0.3}, {Param::c, 1.0},
                                       {Param::d, 0.35}, {Param::e, 0.6}},
                                      0.5),
                                Side::q);
  EXPECT_LT(std::abs(k.script - 1.0), 1e-15);
}

TEST(PatternCoeffs, SingularCoefficient) {
  // d = qa makes (1 - d/qa) vanish
  EXPECT_THROW(pattern_coeffs(Pattern::A,
                              point({{Param::a, 0.4}, {Param::b, 0.3}, {Param::c, 0.5},
                                     {Param::d, 0.2}, {Param::e, 0.6}},
                                    0.5),
                              Side::q),
               SingularCoefficient);
}

// Pattern A, checked directly against series sums at sampled points.
TEST(PatternCoeffs, ACoefficientsSatisfyTheRelation) {
  const auto batch = sample_params(find_relation("pattern-A-eq-a"), 7, 20);
  for (const auto& p : batch.points) {
    const cplx a = p.get(Param::a), b = p.get(Param::b), c = p.get(Param::c),
               d = p.get(Param::d), e = p.get(Param::e), q = p.q;
    const cplx z = b * d / (a * c * e);
    const auto k = pattern_coeffs(Pattern::A, p, Side::q);
    const cplx lhs = series(make_phi<cplx>({a, c, e}, {b, d}, q, z));
    const cplx t1 = k.script * series(make_phi<cplx>({q * a, c, e}, {q * b, d}, q, z));
    const cplx t2 = k.blackboard *
                    series(make_phi<cplx>({q * q * a, q * c, q * e}, {q * q * b, q * d}, q, z / q));
    const cplx t3 = k.fraktur * series(make_phi<cplx>({q * a, c, e}, {q * b, d}, q, z / q, true));
    const double scale = std::abs(lhs) + std::abs(t1) + std::abs(t2) + 1;
    EXPECT_LT(std::abs(lhs - t1 - t2) / scale, 5e-12);
    EXPECT_LT(std::abs(lhs - t1 - t3) / (std::abs(lhs) + std::abs(t1) + std::abs(t3) + 1), 5e-12);
  }
}

TEST(PatternCoeffs, ClassicalSide) {
  const auto k = pattern_coeffs(Pattern::C,
                                point({{Param::a, 0.4}, {Param::b, 8.0}, {Param::c, 0.5},
                                       {Param::d, 9.0}, {Param::e, 0.6}},
                                      0.5),
                                Side::classical);
  const double w = 1 + 0.4 + 0.5 + 0.6 - 8 - 9;
  EXPECT_NEAR(k.fraktur.real(), -w / 72.0, 1e-15);
}

// ---------------------------------------------------------------------------
// instantiate

TEST(Instantiate, PatternAAtAdmissiblePoint) {
  const auto p = point({{Param::a, cplx(0.8, 0.1)}, {Param::b, 0.3}, {Param::c, cplx(0.8, -0.1)},
                        {Param::d, 0.3}, {Param::e, 0.8}},
                       0.5);
  const auto r = instantiate("pattern-A-eq-a", p);
  EXPECT_LT(r.residual, 5 * kStd.tol);
  EXPECT_TRUE(r.lhs.converged);
  EXPECT_EQ(r.rhs_values.size(), 2u);
}

TEST(Instantiate, ArgumentOutsideBoundIsAConstraintViolation) {
  // |bd/(qace)| = 1.2
  const cplx a = 0.5, c = 0.5, e = 0.5, q = 0.5, b = 0.5;
  const cplx d = 1.2 * q * a * c * e / b;
  const auto p = point({{Param::a, a}, {Param::b, b}, {Param::c, c}, {Param::d, d}, {Param::e, e}}, q);
  try {
    instantiate("pattern-A-eq-a", p);
    FAIL() << "expected ConstraintViolated";
  } catch (const ConstraintViolated& err) {
    EXPECT_NE(err.predicate.find("bd/qace"), std::string::npos) << err.predicate;
  }
}

TEST(Instantiate, MissingParameter) {
  EXPECT_THROW(instantiate("pattern-A-eq-a", point({{Param::a, 0.3}}, 0.5)), DomainViolation);
}

TEST(Instantiate, MutationIsDetected) {
  for (const char* id : {"thm-4.1", "thm-4.7", "thm-4.15"}) {
    const Relation& r = find_relation(id);
    const auto batch = sample_params(r, 42, 20);
    const Mutation m{id, 0, 1.01};
    double worst = 0;
    for (const auto& p : batch.points)
      worst = std::max(worst, instantiate<cplx>(r, p, kStd, &m).residual);
    EXPECT_GT(worst, 1e-3) << id;
  }
}

// ---------------------------------------------------------------------------
// Catalog-wide properties

TEST(CatalogProperties, TwoFormsOfEachPatternAgree) {
  for (const char* pat : {"A", "B", "C", "D"}) {
    const std::string plain = std::string("pattern-") + pat + "-eq-" + char(std::tolower(pat[0]));
    const std::string star = plain + char(std::tolower(pat[0]));
    const auto batch = sample_params(find_relation(plain), 11, 30);
    int compared = 0;
    for (const auto& p : batch.points) {
      try {
        const auto x = instantiate(plain, p), y = instantiate(star, p);
        const cplx sx = rhs_sum(x), sy = rhs_sum(y);
        EXPECT_LT(std::abs(sx - sy) / (std::abs(sx) + std::abs(sy) + 1), 5 * kStd.tol) << plain;
        ++compared;
      } catch (const ConstraintViolated&) {
      }
    }
    EXPECT_GE(compared, 20) << plain;
  }
}

// A derived relation, mapped into its parent, must reproduce the parent's
// series and leave the parent's identity intact wherever the parent is
// admissible.
TEST(CatalogProperties, SubstitutionCoherence) {
  int relations = 0;
  for (const Relation& r : registry()) {
    if (r.parent.empty()) continue;
    ++relations;
    const Relation& parent = find_relation(r.parent);
    const auto batch = sample_params(r, 3, 20);
    int matched = 0, admissible = 0;
    for (const auto& p : batch.points) {
      const auto child = instantiate<cplx>(r, p, kStd);
      const ParamSet<cplx> pp = r.to_parent(p);
      // the parent's left-hand side, or one of its right-hand series, is the child's lhs
      const auto b = run_builder(parent, pp, kStd, BuildMode::record);
      std::vector<SeriesSpec<cplx>> specs{b.lhs_spec()};
      for (const auto& t : b.terms())
        if (t.series) specs.push_back(*t.series);
      bool hit = false;
      for (const auto& s : specs) {
        try {
          const auto v = eval_series(s, PrecisionPolicy::standard(1e-14));
          hit = hit || std::abs(v.value - child.lhs.value) <= 1e-11 * std::max(1.0, std::abs(v.value));
        } catch (const Error&) {
        }
      }
      matched += hit;
      try {
        EXPECT_LT(instantiate<cplx>(parent, pp, kStd).residual, 5 * kStd.tol) << r.id;
        ++admissible;
      } catch (const ConstraintViolated&) {
      } catch (const SingularDenominator&) {
      } catch (const SingularFactor&) {
      }
    }
    EXPECT_EQ(matched, static_cast<int>(batch.points.size())) << r.id << " -> " << r.parent;
    RecordProperty(r.id + "_parent_admissible", admissible);
  }
  EXPECT_GE(relations, 25);
}

TEST(CatalogProperties, ClassicalCorollariesHold) {
  for (const Relation& r : registry()) {
    if (r.side != Side::classical) continue;
    const auto batch = sample_params(r, 42, 5);
    for (const auto& p : batch.points)
      EXPECT_LT(instantiate<cplx>(r, p, kStd).residual, kClassicalThreshold) << r.id;
  }
}

TEST(CatalogProperties, ClassicalRefusesExtendedEvaluation) {
  const Relation& r = find_relation("cor-thm-4.1");
  EXPECT_FALSE(static_cast<bool>(r.eval.d34));
}
