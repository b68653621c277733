#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "racg/compare.hpp"
#include "racg/error.hpp"
#include "racg/serialize.hpp"
#include "racg/validate.hpp"

using namespace racg;

namespace {

std::set<std::string> ratio_set(const Reason& r) {
  std::set<std::string> out;
  for (const auto& e : r.ratios) out.insert(e.ratio ? to_string(*e.ratio) : "undefined");
  return out;
}

std::vector<std::pair<std::string, GraphOfCylinders>> gocs() {
  std::vector<std::pair<std::string, GraphOfCylinders>> out;
  for (const auto& [name, g] : fixtures::valid_corpus()) out.emplace_back(name, build_graph_of_cylinders(g));
  out.emplace_back("subdivided_k4", build_graph_of_cylinders(fixtures::subdivided_k4(2)));
  out.emplace_back("single_va_1", fixtures::single_va_goc(1));
  out.emplace_back("single_va_2", fixtures::single_va_goc(2));
  out.emplace_back("refinement", fixtures::refinement_goc());
  return out;
}

}  // namespace

TEST(Rational, Formatting) {
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(QiResult::Inconclusive), "INCONCLUSIVE");
}

TEST(Compare, SquareWithOneOrTwoBranches) {
  auto v = compare(fixtures::gva(), fixtures::gva2());
  EXPECT_EQ(v.result, QiResult::Yes);
  EXPECT_TRUE(v.reasons.empty());
  EXPECT_EQ(v.beta.size(), 2u);
}

TEST(Compare, ThetaAgainstSquare) {
  auto v = compare(fixtures::g2e(), fixtures::gva());
  EXPECT_EQ(v.result, QiResult::No);
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0].code, "INVARIANT_MISMATCH");
}

TEST(Compare, DensityRatiosOfSingleVaPair) {
  auto v = compare(fixtures::single_va_goc(1), fixtures::single_va_goc(2));
  EXPECT_EQ(v.result, QiResult::No);
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0].code, "DENSITY_RATIO_MISMATCH");
  EXPECT_EQ(ratio_set(v.reasons[0]), (std::set<std::string>{"1/2", "1/1"}));
}

TEST(RatioTable, Examples) {
  auto x = build_graph_of_cylinders(fixtures::gva());
  auto y = build_graph_of_cylinders(fixtures::gva2());
  auto dx = neighbor_refine(x, initial_decoration(x));
  auto dy = neighbor_refine(y, initial_decoration(y));
  auto t = va_ratio_table(x, dx, y, dy, {0, 1});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(to_string(*t[0].ratio), "1/2");
  EXPECT_EQ(t[0].klass, "HANG:VF#1");

  auto same = va_ratio_table(x, dx, x, dx, {0, 1});
  for (const auto& e : same) EXPECT_EQ(to_string(*e.ratio), "1/1");

  auto s = build_graph_of_cylinders(fixtures::gstar());
  auto ds = neighbor_refine(s, initial_decoration(s));
  for (const auto& e : va_ratio_table(s, ds, s, ds, {0, 1})) EXPECT_EQ(*e.ratio, Rational(1));
}

TEST(RatioTable, ZeroDenominatorIsReportedNotThrown) {
  auto x = fixtures::single_va_goc(1);
  auto dx = neighbor_refine(x, initial_decoration(x));
  // map the hanging class onto the rigid class on purpose
  auto t = va_ratio_table(x, dx, x, dx, {0, 2, 1});
  for (const auto& e : t) EXPECT_TRUE(e.ratio.has_value());
  auto g2 = parse_goc(R"({"nodes":[
      {"kind":"CYLINDER","class":"VA","gens":["a","b","c","d"]},
      {"kind":"HANGING","gens":["a","b","p"]},
      {"kind":"RIGID","label":"W","gens":["a","b","q","r","s"]}],
    "edges":[{"cyl":0,"other":1}]})");
  auto d2 = neighbor_refine(g2, initial_decoration(g2));
  auto t2 = va_ratio_table(x, dx, g2, d2, {0, 1, 2});
  bool undefined = false;
  for (const auto& e : t2) undefined = undefined || !e.ratio;
  EXPECT_TRUE(undefined);
}

TEST(Compare, SingleCylinderInputs) {
  auto k = compare(fixtures::k23(), fixtures::k23());
  EXPECT_EQ(k.result, QiResult::Yes);
  auto mixed = compare(fixtures::k23(), fixtures::g2e());
  EXPECT_EQ(mixed.result, QiResult::Inconclusive);
  ASSERT_EQ(mixed.reasons.size(), 1u);
  EXPECT_EQ(mixed.reasons[0].code, "TRIVIAL_JSJ");
}

TEST(Compare, RigidCertificates) {
  auto k = build_graph_of_cylinders(fixtures::subdivided_k4(2));
  EXPECT_EQ(compare(k, k).result, QiResult::Yes);

  auto relabelled = fixtures::single_va_goc(1);
  for (auto& n : relabelled.nodes)
    if (n.kind == NodeKind::Rigid) n.label = "something else";
  auto v = compare(fixtures::single_va_goc(1), relabelled);
  EXPECT_EQ(v.result, QiResult::Inconclusive);
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0].code, "RIGID_PRESENT_UNMATCHED");

  // a mismatch is still a mismatch with rigid pieces present
  auto w = compare(fixtures::single_va_goc(1), fixtures::refinement_goc());
  EXPECT_EQ(w.result, QiResult::No);
}

TEST(Compare, VfdDuplication) {
  auto one = fixtures::k2n_with_branches(3, 1);
  auto two = fixtures::k2n_with_branches(3, 2);
  ASSERT_TRUE(validate(one, 3).passed);
  ASSERT_TRUE(validate(two, 3).passed);
  EXPECT_EQ(compare(one, two).result, QiResult::Yes);
  EXPECT_EQ(compare(fixtures::k2n_with_branches(2, 1), fixtures::k2n_with_branches(2, 4)).result, QiResult::Yes);
}

TEST(Compare, IdentityAndSymmetry) {
  auto all = gocs();
  for (const auto& [nx, x] : all) {
    bool rigid = x.count(NodeKind::Rigid) > 0;
    if (!rigid) { EXPECT_EQ(compare(x, x).result, QiResult::Yes) << nx; }
    for (const auto& [ny, y] : all) {
      auto a = compare(x, y), b = compare(y, x);
      EXPECT_EQ(a.result, b.result) << nx << " vs " << ny;
      if (a.result == QiResult::Yes) { EXPECT_FALSE(a.beta.empty()); }
      if (a.result == QiResult::No) { EXPECT_FALSE(a.reasons.empty()); }
    }
  }
}

TEST(Compare, MismatchSurvivesDensityRefinement) {
  auto all = gocs();
  for (const auto& [nx, x] : all)
    for (const auto& [ny, y] : all) {
      if (find_class_bijection(compute_invariant(x, false), compute_invariant(y, false))) continue;
      EXPECT_FALSE(find_class_bijection(compute_invariant(x, true), compute_invariant(y, true))) << nx << " " << ny;
    }
}

TEST(Compare, InvalidGraphsAreRejected) {
  EXPECT_THROW(compare(fixtures::gbad(), fixtures::gva()), AssumptionsFailed);
}

TEST(Commensurability, Inequality) {
  EXPECT_TRUE(commensurability_inequality(2, 1, 34, 2));
  EXPECT_FALSE(commensurability_inequality(2, 1, 33, 2));
  EXPECT_FALSE(commensurability_inequality(5, 3, 5, 3));
  EXPECT_TRUE(commensurability_inequality(3, 2, 20, 1));
  EXPECT_FALSE(commensurability_inequality(3, 2, 17, 1));
}

TEST(Commensurability, FromGraphs) {
  auto small = build_graph_of_cylinders(fixtures::k2n_with_branches(3, 1));
  auto big = build_graph_of_cylinders(fixtures::k2n_with_branches(35, 2));
  for (auto [x, y] : {std::pair{&small, &big}, std::pair{&big, &small}}) {
    auto f = commensurability_obstruction(*x, *y);
    EXPECT_TRUE(f.applicable);
    EXPECT_EQ(f.i, 2u);
    EXPECT_EQ(f.deg_v, 1u);
    EXPECT_EQ(f.j, 34u);
    EXPECT_EQ(f.deg_v2, 2u);
    EXPECT_TRUE(f.obstructed);
  }
  auto same = commensurability_obstruction(small, small);
  EXPECT_TRUE(same.applicable);
  EXPECT_FALSE(same.obstructed);
  auto na = commensurability_obstruction(build_graph_of_cylinders(fixtures::g2e()), small);
  EXPECT_FALSE(na.applicable);
  EXPECT_FALSE(na.obstructed);
}
