#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "racg/error.hpp"
#include "racg/serialize.hpp"
#include "racg/validate.hpp"

#ifndef RACG_CORPUS_DIR
#error "RACG_CORPUS_DIR must point at data/corpus"
#endif

namespace fixtures {

using racg::DefiningGraph;

DefiningGraph edges(const std::vector<std::pair<std::string, std::string>>& e) { return DefiningGraph::from_edges(e); }

DefiningGraph g2e() {
  return edges({{"a", "u1"}, {"u1", "u2"}, {"u2", "b"}, {"a", "u3"}, {"u3", "u4"}, {"u4", "b"},
                {"a", "u5"}, {"u5", "u6"}, {"u6", "b"}});
}

DefiningGraph gva() {
  return edges({{"a", "c1"}, {"c1", "b"}, {"b", "c2"}, {"c2", "a"}, {"a", "p1"}, {"p1", "p2"}, {"p2", "b"}});
}

DefiningGraph gva2() {
  return edges({{"a", "c1"}, {"c1", "b"}, {"b", "c2"}, {"c2", "a"}, {"a", "p1"}, {"p1", "p2"}, {"p2", "b"},
                {"a", "q1"}, {"q1", "q2"}, {"q2", "b"}});
}

DefiningGraph gstar() {
  return edges({{"a", "x1"}, {"x1", "d"}, {"d", "x2"}, {"x2", "b"}, {"b", "x3"}, {"x3", "e"}, {"e", "x4"},
                {"x4", "a"}, {"c", "a"}, {"c", "b"}, {"c", "d"}, {"c", "e"}});
}

DefiningGraph gbad() {
  return edges({{"x", "c"}, {"c", "y"}, {"y", "d"}, {"d", "x"}, {"c", "n1"}, {"n1", "n2"}, {"n2", "d"},
                {"x", "m1"}, {"m1", "m2"}, {"m2", "y"}});
}

DefiningGraph k23() { return edges({{"a", "c1"}, {"a", "c2"}, {"a", "c3"}, {"b", "c1"}, {"b", "c2"}, {"b", "c3"}}); }

DefiningGraph k4() { return edges({{"p", "q"}, {"p", "r"}, {"p", "s"}, {"q", "r"}, {"q", "s"}, {"r", "s"}}); }

DefiningGraph cycle(int n) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < n; ++i) e.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
  return edges(e);
}

DefiningGraph subdivided_k4(int inner) {
  const std::vector<std::string> corner = {"k1", "k2", "k3", "k4"};
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::string prev = corner[i];
      for (int s = 1; s <= inner; ++s) {
        std::string v = "s" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(s);
        e.push_back({prev, v});
        prev = v;
      }
      e.push_back({prev, corner[j]});
    }
  return edges(e);
}

DefiningGraph theta_with_hub() {
  return edges({{"a", "c"}, {"c", "b"}, {"a", "p1"}, {"p1", "p2"}, {"p2", "b"}, {"a", "q1"}, {"q1", "q2"}, {"q2", "b"}});
}

DefiningGraph k2n_with_branches(int n, int branches) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= n; ++i) {
    e.push_back({"a", "c" + std::to_string(i)});
    e.push_back({"b", "c" + std::to_string(i)});
  }
  for (int k = 1; k <= branches; ++k) {
    const auto p = "p" + std::to_string(k), q = "q" + std::to_string(k);
    e.push_back({"a", p});
    e.push_back({p, q});
    e.push_back({q, "b"});
  }
  return edges(e);
}

DefiningGraph relabel(const DefiningGraph& g, const std::vector<int>& perm, const std::string& prefix) {
  racg::GraphBuilder b;
  auto fresh = [&](int old) { return prefix + g.name(old); };
  for (int old : perm) b.add_vertex(fresh(old));
  auto es = g.edges();
  // Edge order follows the new vertex order so nothing of the old presentation survives.
  std::vector<int> pos(g.size());
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) pos[perm[i]] = i;
  std::sort(es.begin(), es.end(), [&](auto x, auto y) {
    return std::minmax(pos[x.first], pos[x.second]) < std::minmax(pos[y.first], pos[y.second]);
  });
  for (auto [u, v] : es) b.add_edge(fresh(u), fresh(v));
  return b.build();
}

std::vector<std::pair<std::string, DefiningGraph>> valid_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(RACG_CORPUS_DIR)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.find(".expect.") == std::string::npos) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, DefiningGraph>> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream text;
    text << in.rdbuf();
    try {
      auto g = racg::parse_graph(text.str(), racg::detect_format(text.str()));
      if (racg::validate(g, 3).passed) out.emplace_back(f.filename().string(), std::move(g));
    } catch (const racg::Error&) {
      // the corpus also holds deliberately malformed inputs
    }
  }
  return out;
}

namespace {

racg::GraphOfCylinders from(const racg::Json& j) { return racg::goc_from_json(j); }

}  // namespace

racg::GraphOfCylinders single_va_goc(int hanging_neighbours) {
  using racg::Json;
  Json nodes = Json::array();
  nodes.push_back({{"kind", "CYLINDER"}, {"class", "VA"}, {"collection", {"a", "b"}}, {"gens", {"a", "b", "c1", "c2"}}});
  for (int k = 1; k <= hanging_neighbours; ++k) {
    const auto p = "p" + std::to_string(k), q = "q" + std::to_string(k);
    nodes.push_back({{"kind", "HANGING"}, {"gens", {"a", "b", p, q}}});
  }
  nodes.push_back({{"kind", "RIGID"}, {"label", "W_abcdefg"}, {"gens", {"a", "b", "c", "d", "e", "f", "g"}}});
  Json es = Json::array();
  for (int k = 1; k <= hanging_neighbours + 1; ++k) es.push_back({{"cyl", 0}, {"other", k}, {"gens", {"a", "b"}}});
  return from({{"nodes", nodes}, {"edges", es}});
}

racg::GraphOfCylinders refinement_goc() {
  using racg::Json;
  // c1..c6 are nodes 0..5, h1..h4 are 6..9, r is 10.
  Json nodes = Json::array();
  auto cyl = [&](const char* klass, Json gens) {
    nodes.push_back({{"kind", "CYLINDER"}, {"class", klass}, {"gens", gens}});
  };
  cyl("2E", {"x1", "y1"});
  cyl("VA", {"x2", "y2", "z2", "w2"});
  cyl("2E", {"x3", "y3"});
  cyl("2E", {"x4", "y4"});
  cyl("VA", {"x5", "y5", "z5", "w5"});
  cyl("2E", {"x6", "y6"});
  nodes.push_back({{"kind", "HANGING"}, {"gens", {"x2", "y2", "h1"}}});
  nodes.push_back({{"kind", "HANGING"}, {"gens", {"x3", "y3", "h2"}}});
  nodes.push_back({{"kind", "HANGING"}, {"gens", {"x5", "y5", "h3"}}});
  nodes.push_back({{"kind", "HANGING"}, {"gens", {"x5", "y5", "h4"}}});
  nodes.push_back({{"kind", "RIGID"},
                   {"label", "R"},
                   {"gens", {"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4", "x5", "y5", "x6", "y6"}}});
  Json es = Json::array();
  auto edge = [&](int c, int o, const std::string& tag) {
    es.push_back({{"cyl", c}, {"other", o}, {"gens", {"x" + tag, "y" + tag}}});
  };
  for (int c : {0, 1, 2, 3, 4, 5}) edge(c, 10, std::to_string(c + 1));
  edge(2, 7, "3");
  edge(1, 6, "2");
  edge(4, 8, "5");
  edge(4, 9, "5");
  return from({{"nodes", nodes}, {"edges", es}});
}

}  // namespace fixtures
