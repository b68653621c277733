#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/graph.hpp"
#include "racg/random_graphs.hpp"

using namespace racg;

namespace {

std::vector<std::string> labels(const DefiningGraph& g, const VertexSet& s) { return g.names_of(s); }

std::set<std::set<std::string>> named_partition(const DefiningGraph& g, const std::vector<VertexSet>& parts) {
  std::set<std::set<std::string>> out;
  for (const auto& p : parts) {
    auto n = g.names_of(p);
    out.insert({n.begin(), n.end()});
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Parse, EdgeListKeepsFirstAppearanceOrder) {
  auto g = parse_graph("a -- b\nb -- c", GraphFormat::EdgeList);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(g.id("a"), g.id("b")));
  EXPECT_FALSE(g.adjacent(g.id("a"), g.id("c")));
}

TEST(Parse, EdgeListCommentsAndWhitespace) {
  auto g = parse_graph("# header\n  a --  b   # trailing\n\n\tb -- c\n", GraphFormat::EdgeList);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(Parse, DotDuplicateEdgesCollapse) {
  auto g = parse_graph("graph G { a -- b; a -- b; }", GraphFormat::DotSubset);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Parse, DotChainsAttributesAndComments) {
  auto g = parse_graph("strict graph \"x y\" {\n // c\n node [shape=box];\n a -- b -- c [color=red];\n d;\n}",
                       GraphFormat::DotSubset);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(Parse, SelfLoopIsRejected) {
  EXPECT_EQ(code_of([] { parse_graph("a -- a", GraphFormat::EdgeList); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { parse_graph("graph { a -- a }", GraphFormat::DotSubset); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})", GraphFormat::Json); }),
            ErrorCode::SelfLoop);
}

TEST(Parse, MalformedInputReportsLine) {
  try {
    parse_graph("a -- b\nb c\n", GraphFormat::EdgeList);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_EQ(code_of([] { parse_graph("a -- b -- c", GraphFormat::EdgeList); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("digraph { a -> b }", GraphFormat::DotSubset); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("graph { a -- b ", GraphFormat::DotSubset); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":["a"],"edges":[["a","b"]]})", GraphFormat::Json); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":["a","a"],"edges":[]})", GraphFormat::Json); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("{not json", GraphFormat::Json); }), ErrorCode::ParseError);
}

TEST(Parse, DetectFormat) {
  EXPECT_EQ(detect_format("  {\"vertices\":[]}"), GraphFormat::Json);
  EXPECT_EQ(detect_format("graph g { }"), GraphFormat::DotSubset);
  EXPECT_EQ(detect_format("// c\nstrict graph { }"), GraphFormat::DotSubset);
  EXPECT_EQ(detect_format("# c\na -- b"), GraphFormat::EdgeList);
}

TEST(Parse, RoundTripAllFormats) {
  auto corpus = random_corpus(7, 60, 9);
  corpus.push_back(fixtures::gstar());
  corpus.push_back(fixtures::k23());
  for (const auto& g : corpus) {
    for (auto fmt : {GraphFormat::Json, GraphFormat::DotSubset}) {
      auto back = parse_graph(serialize_graph(g, fmt), fmt);
      EXPECT_EQ(back, g);
      EXPECT_EQ(back.names(), g.names());
    }
    auto back = parse_graph(serialize_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList);
    EXPECT_EQ(std::set<std::string>(back.names().begin(), back.names().end()),
              std::set<std::string>(g.names().begin(), g.names().end()));
    std::set<std::pair<std::string, std::string>> e1, e2;
    for (auto [u, v] : g.edges()) e1.insert(std::minmax(g.name(u), g.name(v)));
    for (auto [u, v] : back.edges()) e2.insert(std::minmax(back.name(u), back.name(v)));
    EXPECT_EQ(e1, e2);
  }
}

TEST(Essential, Examples) {
  auto g = fixtures::g2e();
  EXPECT_EQ(labels(g, essential_vertices(g)), (std::vector<std::string>{"a", "b"}));
  auto s = fixtures::gstar();
  auto es = labels(s, essential_vertices(s));
  EXPECT_EQ(std::set<std::string>(es.begin(), es.end()), (std::set<std::string>{"a", "b", "c", "d", "e"}));
  auto k = fixtures::k23();
  EXPECT_EQ(labels(k, essential_vertices(k)), (std::vector<std::string>{"a", "b"}));
}

TEST(Components, Examples) {
  auto g = fixtures::g2e();
  EXPECT_EQ(named_partition(g, components_after_removal(g, g.ids({"a", "b"}))),
            (std::set<std::set<std::string>>{{"u1", "u2"}, {"u3", "u4"}, {"u5", "u6"}}));
  auto v = fixtures::gva();
  EXPECT_EQ(named_partition(v, components_after_removal(v, v.ids({"a", "b"}))),
            (std::set<std::set<std::string>>{{"c1"}, {"c2"}, {"p1", "p2"}}));
  auto two = fixtures::edges({{"a", "b"}, {"c", "d"}});
  EXPECT_EQ(components_after_removal(two, {}).size(), 2u);
  EXPECT_EQ(components_after_removal(g, {}).size(), 1u);
  EXPECT_FALSE(connected_after_removal(g, g.ids({"a"}), g.id("a"), g.id("b")));
}

TEST(Components, AgreeWithOracleOnRandomRemovals) {
  for (const auto& g : random_corpus(11, 40, 9)) {
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << g.size()); m += 7) {
      EXPECT_EQ(count_components_after_removal(g, oracle::members(m)), oracle::components(g, m));
    }
  }
}

namespace {

std::set<oracle::K4Key> library_k4s(const DefiningGraph& g) {
  std::set<oracle::K4Key> out;
  for (const auto& k : subdivided_k4_list(g)) {
    oracle::K4Key key{};
    key[0] = oracle::mask_of({k.corners.begin(), k.corners.end()});
    for (int b = 0; b < 6; ++b) key[b + 1] = oracle::mask_of(k.branches[b]);
    out.insert(key);
  }
  return out;
}

}  // namespace

TEST(SubdividedK4, Examples) {
  auto k = fixtures::k4();
  auto list = subdivided_k4_list(k);
  ASSERT_EQ(list.size(), 1u);
  for (const auto& b : list[0].branches) EXPECT_EQ(b.size(), 2u);

  EXPECT_TRUE(subdivided_k4_list(fixtures::g2e()).empty());

  auto s = fixtures::gstar();
  bool found = false;
  for (const auto& e : subdivided_k4_list(s)) {
    auto corners = s.names_of({e.corners.begin(), e.corners.end()});
    if (std::set<std::string>(corners.begin(), corners.end()) != std::set<std::string>{"a", "b", "c", "d"}) continue;
    for (const auto& b : e.branches)
      if (s.names_of(make_set(b)) == std::vector<std::string>{"a", "x1", "d"}) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(SubdividedK4, BranchesAreInternallyDisjointPaths) {
  for (const auto& g : random_corpus(3, 60, 9)) {
    for (const auto& k : subdivided_k4_list(g)) {
      std::set<int> interior;
      for (int b = 0; b < 6; ++b) {
        const auto& path = k.branches[b];
        ASSERT_GE(path.size(), 2u);
        EXPECT_EQ(path.front(), k.corners[kCornerPairs[b].first]);
        EXPECT_EQ(path.back(), k.corners[kCornerPairs[b].second]);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(g.adjacent(path[i], path[i + 1]));
        for (std::size_t i = 1; i + 1 < path.size(); ++i) EXPECT_TRUE(interior.insert(path[i]).second);
      }
    }
  }
}

TEST(SubdividedK4, AgreesWithOracle) {
  for (const auto& g : random_corpus(5, 60, 9)) EXPECT_EQ(library_k4s(g), oracle::subdivided_k4s(g));
  EXPECT_EQ(library_k4s(fixtures::gstar()), oracle::subdivided_k4s(fixtures::gstar()));
}

TEST(Hyperbolic, Examples) {
  EXPECT_TRUE(is_hyperbolic(fixtures::g2e()));
  auto v = fixtures::gva();
  EXPECT_FALSE(is_hyperbolic(v));
  auto sq = find_induced_square(v);
  ASSERT_TRUE(sq.has_value());
  auto n = v.names_of(make_set({sq->begin(), sq->end()}));
  EXPECT_EQ(std::set<std::string>(n.begin(), n.end()), (std::set<std::string>{"a", "b", "c1", "c2"}));
  EXPECT_TRUE(is_hyperbolic(fixtures::edges({{"a", "b"}})));
}

TEST(Graph, BuilderRejectsSelfLoopAndCollapsesDuplicates) {
  GraphBuilder b;
  b.add_edge("x", "y");
  b.add_edge("y", "x");
  EXPECT_EQ(b.build().edge_count(), 1);
  EXPECT_EQ(code_of([&] { b.add_edge("x", "x"); }), ErrorCode::SelfLoop);
}

TEST(Graph, FingerprintSeparatesGraphs) {
  EXPECT_EQ(fixtures::g2e().fingerprint(), fixtures::g2e().fingerprint());
  EXPECT_NE(fixtures::gva().fingerprint(), fixtures::gva2().fingerprint());
}
