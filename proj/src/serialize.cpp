#include "racg/serialize.hpp"

#include <map>
#include <sstream>

#include "racg/error.hpp"

namespace racg {

namespace {

Json names(const GraphOfCylinders& goc, const VertexSet& s) {
  Json a = Json::array();
  for (VertexId v : s) a.push_back(goc.generators.at(v));
  return a;
}

Json density_json(const DensityVector& d) {
  if (!d) return "NONE";
  return Json(*d);
}

}  // namespace

Json to_json(const Multiplicity& m) {
  if (m.is_infinite()) return "inf";
  return m.value();
}

Json to_json(const AssumptionReport& r) {
  Json j;
  j["level"] = r.level;
  j["passed"] = r.passed;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed) {
      cj["witness"] = c.witness;
      cj["detail"] = c.detail;
    }
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

Json to_json(const GraphOfCylinders& goc) {
  Json j;
  j["generators"] = goc.generators;
  j["nodes"] = Json::array();
  for (const auto& n : goc.nodes) {
    Json nj;
    nj["id"] = n.id;
    nj["kind"] = std::string(to_string(n.kind));
    if (n.kind == NodeKind::Cylinder) {
      nj["class"] = std::string(to_string(n.klass));
      nj["collection"] = names(goc, n.collection);
    }
    if (n.kind == NodeKind::Hanging) nj["source"] = std::string(to_string(n.source));
    nj["gens"] = names(goc, n.gens);
    if (n.kind == NodeKind::Rigid) nj["label"] = n.label;
    j["nodes"].push_back(std::move(nj));
  }
  j["edges"] = Json::array();
  for (const auto& e : goc.edges) {
    Json ej;
    ej["cyl"] = e.cyl;
    ej["other"] = e.other;
    ej["gens"] = names(goc, e.gens);
    ej["kind"] = std::string(to_string(e.kind));
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

Json to_json(const StructureInvariant& inv) {
  Json j;
  j["density_refined"] = inv.density_refined;
  j["classes"] = Json::array();
  for (std::size_t c = 0; c < inv.classes.size(); ++c) {
    const auto& cls = inv.classes[c];
    Json cj;
    cj["index"] = c;
    cj["ornament"] = cls.ornament.to_string();
    cj["nodes"] = cls.nodes;
    if (inv.density_refined) cj["density"] = density_json(cls.density);
    cj["signature"] = Json::array();
    for (const auto& e : cls.signature)
      cj["signature"].push_back({{"class", e.klass}, {"edge_kind", std::string(to_string(e.kind))}, {"count", to_json(e.count)}});
    j["classes"].push_back(std::move(cj));
  }
  j["matrix"] = Json::array();
  for (const auto& row : inv.matrix) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(to_json(m));
    j["matrix"].push_back(std::move(r));
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["result"] = std::string(to_string(v.result));
  j["reasons"] = Json::array();
  for (const auto& r : v.reasons) {
    Json rj;
    rj["code"] = r.code;
    rj["detail"] = r.detail;
    if (!r.ratios.empty()) {
      rj["ratios"] = Json::array();
      for (const auto& e : r.ratios)
        rj["ratios"].push_back({{"cylinder", e.cylinder},
                                {"class", e.klass},
                                {"ratio", e.ratio ? Json(to_string(*e.ratio)) : Json("DIVISION_UNDEFINED")}});
    }
    j["reasons"].push_back(std::move(rj));
  }
  j["beta"] = Json::array();
  for (auto [a, b] : v.beta) j["beta"].push_back({a, b});
  return j;
}

Json to_json(const CommensurabilityFinding& f) {
  Json j;
  j["applicable"] = f.applicable;
  j["i"] = f.i;
  j["j"] = f.j;
  j["deg_v"] = f.deg_v;
  j["deg_v_prime"] = f.deg_v2;
  j["obstructed"] = f.obstructed;
  j["detail"] = f.detail;
  return j;
}

Json to_json(const SlideTrace& t) {
  Json j;
  j["r"] = t.r;
  j["x1"] = t.x1;
  j["y2"] = t.y2;
  j["depth"] = t.depth;
  j["bound"] = t.bound;
  j["max_slide"] = t.max_slide;
  auto records = [](const std::vector<SlideRecord>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back({{"origin_level", r.origin_level}, {"final_level", r.final_level}, {"count", r.count}});
    return a;
  };
  j["settled"] = records(t.settled);
  j["unsettled"] = records(t.unsettled);
  j["levels"] = Json::array();
  for (const auto& l : t.levels)
    j["levels"].push_back({{"level", l.level},
                           {"vertices", l.vertices},
                           {"min_load", l.min_load},
                           {"max_load", l.max_load},
                           {"passed_on", l.passed_on},
                           {"kept_furthest", l.kept_furthest}});
  return j;
}

std::string level_histogram_csv(const SlideTrace& t) {
  std::ostringstream out;
  out << "level,vertices,min_load,max_load,passed_on,kept_furthest\n";
  for (const auto& l : t.levels)
    out << l.level << ',' << l.vertices << ',' << l.min_load << ',' << l.max_load << ',' << l.passed_on << ','
        << (l.kept_furthest ? "true" : "false") << '\n';
  return out.str();
}

namespace {

[[noreturn]] void bad(const std::string& why) { throw ParseError(1, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

GraphOfCylinders goc_from_json(const Json& j) {
  if (!j.is_object()) bad("graph of cylinders must be a JSON object");
  GraphOfCylinders goc;
  std::map<std::string, VertexId> index;
  auto intern = [&](const Json& s) -> VertexId {
    if (!s.is_string()) bad("generator labels must be strings");
    auto name = s.get<std::string>();
    auto [it, fresh] = index.emplace(name, static_cast<VertexId>(goc.generators.size()));
    if (fresh) goc.generators.push_back(name);
    return it->second;
  };
  auto gen_set = [&](const Json& a) {
    if (!a.is_array()) bad("generator sets must be arrays");
    std::vector<VertexId> out;
    for (const auto& s : a) out.push_back(intern(s));
    return make_set(std::move(out));
  };
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) bad("'generators' must be an array");
    for (const auto& s : j["generators"]) intern(s);
  }

  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array() || nodes.empty()) bad("'nodes' must be a non-empty array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Json& nj = nodes[i];
    GocNode n;
    n.id = static_cast<int>(i);
    if (nj.contains("id") && nj["id"] != static_cast<int>(i)) bad("node ids must equal their position");
    const auto kind = field(nj, "kind").get<std::string>();
    if (kind == "CYLINDER") {
      n.kind = NodeKind::Cylinder;
      const auto klass = field(nj, "class").get<std::string>();
      if (klass == "2E") n.klass = CylinderClass::TwoEnded;
      else if (klass == "VA") n.klass = CylinderClass::VA;
      else if (klass == "VFD") n.klass = CylinderClass::VFD;
      else bad("unknown cylinder class '" + klass + "'");
    } else if (kind == "HANGING") {
      n.kind = NodeKind::Hanging;
      if (nj.contains("source") && nj["source"] == "CROSSING_TRIPLES") n.source = HangingSource::CrossingTriples;
    } else if (kind == "RIGID") {
      n.kind = NodeKind::Rigid;
      n.label = nj.contains("label") ? nj["label"].get<std::string>() : "unlabelled#" + std::to_string(i);
    } else {
      bad("unknown node kind '" + kind + "'");
    }
    if (nj.contains("gens")) n.gens = gen_set(nj["gens"]);
    if (nj.contains("collection")) n.collection = gen_set(nj["collection"]);
    goc.nodes.push_back(std::move(n));
  }

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad("'edges' must be an array");
    for (const auto& ej : j["edges"]) {
      GocEdge e;
      e.cyl = field(ej, "cyl").get<int>();
      e.other = field(ej, "other").get<int>();
      const int n = static_cast<int>(goc.nodes.size());
      if (e.cyl < 0 || e.cyl >= n || e.other < 0 || e.other >= n) bad("edge endpoint out of range");
      if (goc.nodes[e.cyl].kind != NodeKind::Cylinder || goc.nodes[e.other].kind == NodeKind::Cylinder)
        bad("edges must join a cylinder to a non-cylinder");
      e.gens = ej.contains("gens") ? gen_set(ej["gens"]) : set_intersection(goc.nodes[e.cyl].gens, goc.nodes[e.other].gens);
      if (ej.contains("kind")) {
        const auto k = ej["kind"].get<std::string>();
        if (k == "DINF") e.kind = EdgeKind::DInf;
        else if (k == "DINF_X_Z2") e.kind = EdgeKind::DInfXZ2;
        else bad("unknown edge kind '" + k + "'");
      } else if (e.gens.size() == 2 || e.gens.size() == 3) {
        e.kind = e.gens.size() == 2 ? EdgeKind::DInf : EdgeKind::DInfXZ2;
      } else {
        bad("edge kind missing and not derivable from its generators");
      }
      goc.edges.push_back(std::move(e));
    }
  }
  return goc;
}

GraphOfCylinders parse_goc(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    return goc_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed graph of cylinders: ") + e.what());
  }
}

}  // namespace racg
