#include "outerstring/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace outerstring {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<unsigned long long>()))
                                  : mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    mpz_class out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.get<std::string>());
    return out;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("expected an integer, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Point> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vertices must be an array");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json vertices_to_json(const std::vector<Point>& vs) {
  Json out = Json::array();
  for (const auto& p : vs) out.push_back(point_to_json(p));
  return out;
}

}  // namespace

Rational rational_from_json(const Json& num, const Json& den) {
  mpz_class d = integer_from_json(den);
  if (d == 0) throw ParseError("zero denominator");
  Rational r(integer_from_json(num), d);
  r.canonicalize();
  return r;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a point must be an array");
  if (j.size() == 2) return Point(rational_from_json(j[0], 1), rational_from_json(j[1], 1));
  if (j.size() == 4) return Point(rational_from_json(j[0], j[1]), rational_from_json(j[2], j[3]));
  throw ParseError("a point needs 2 or 4 entries, got " + j.dump());
}

Json point_to_json(const Point& p) {
  if (p.x.get_den() == 1 && p.y.get_den() == 1) {
    return Json::array({integer_to_json(p.x.get_num()), integer_to_json(p.y.get_num())});
  }
  return Json::array({integer_to_json(p.x.get_num()), integer_to_json(p.x.get_den()),
                      integer_to_json(p.y.get_num()), integer_to_json(p.y.get_den())});
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  const Json& strings = member(j, "strings");
  if (!strings.is_array()) throw ParseError("\"strings\" must be an array");
  for (const auto& s : strings) {
    GroundedString g;
    const Json& id = member(s, "id");
    g.id = id.is_string() ? id.get<std::string>() : id.dump();
    g.vertices = vertices_from_json(member(s, "vertices"));
    inst.strings.push_back(std::move(g));
  }
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json strings = Json::array();
  for (const auto& s : inst.strings) strings.push_back({{"id", s.id}, {"vertices", vertices_to_json(s.vertices)}});
  return {{"strings", strings}};
}

Graph graph_from_json(const Json& j) {
  const Json& n = member(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0) throw ParseError("\"n\" must be a non-negative integer");
  const int count = n.get<int>();
  std::vector<Edge> edges;
  for (const auto& e : member(j, "edges")) {
    const auto uv = int_list(e);
    if (uv.size() != 2) throw ParseError("an edge needs two endpoints");
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= count || uv[1] >= count || uv[0] == uv[1]) {
      throw ParseError("bad edge " + e.dump());
    }
    edges.emplace_back(uv[0], uv[1]);
  }
  return Graph(count, edges);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  const Json& nodes = member(j, "nodes");
  const Json& bags = member(j, "bags");
  std::map<std::string, int> index;
  TreeDecomposition td;
  for (const auto& node : nodes) {
    const std::string key = node.is_string() ? node.get<std::string>() : node.dump();
    if (!index.emplace(key, static_cast<int>(index.size())).second) throw ParseError("duplicate node " + key);
    if (!bags.contains(key)) throw ParseError("no bag for node " + key);
    auto bag = int_list(bags.at(key));
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
  }
  for (const auto& e : member(j, "treeEdges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("a tree edge needs two nodes");
    int ends[2];
    for (int i = 0; i < 2; ++i) {
      const std::string key = e[static_cast<std::size_t>(i)].is_string() ? e[static_cast<std::size_t>(i)].get<std::string>()
                                                                          : e[static_cast<std::size_t>(i)].dump();
      auto it = index.find(key);
      if (it == index.end()) throw ParseError("unknown node " + key);
      ends[i] = it->second;
    }
    td.tree_edges.emplace_back(ends[0], ends[1]);
  }
  return td;
}

Json decomposition_to_json(const TreeDecomposition& td) {
  Json nodes = Json::array();
  Json bags = Json::object();
  for (int i = 0; i < td.node_count(); ++i) {
    nodes.push_back(i);
    bags[std::to_string(i)] = td.bags[static_cast<std::size_t>(i)];
  }
  Json edges = Json::array();
  for (const auto& [a, b] : td.tree_edges) edges.push_back({a, b});
  return {{"nodes", nodes}, {"treeEdges", edges}, {"bags", bags}};
}

MinorModel model_from_json(const Json& j, const Instance* inst) {
  std::map<std::string, int> by_id;
  if (inst != nullptr) {
    for (std::size_t i = 0; i < inst->size(); ++i) by_id[inst->strings[i].id] = static_cast<int>(i);
  }
  MinorModel model;
  const Json& sets = j.is_array() ? j : member(j, "branchSets");
  for (const auto& set : sets) {
    if (!set.is_array()) throw ParseError("a branch set must be an array");
    std::vector<int> vs;
    for (const auto& v : set) {
      if (v.is_number_integer()) {
        vs.push_back(v.get<int>());
      } else if (v.is_string() && inst != nullptr) {
        auto it = by_id.find(v.get<std::string>());
        if (it == by_id.end()) throw ParseError("unknown string id " + v.get<std::string>());
        vs.push_back(it->second);
      } else {
        throw ParseError("bad branch set entry " + v.dump());
      }
    }
    model.branch_sets.push_back(std::move(vs));
  }
  return model;
}

Json model_to_json(const MinorModel& model) { return {{"branchSets", model.branch_sets}}; }

ColorLists lists_from_json(const Json& j) {
  const Json& lists = j.is_array() ? j : member(j, "lists");
  ColorLists out;
  for (const auto& l : lists) out.push_back(int_list(l));
  return out;
}

std::vector<DoubleGroundedCurve> curves_from_json(const Json& j) {
  std::vector<DoubleGroundedCurve> out;
  for (const auto& c : member(j, "curves")) {
    const Json& id = member(c, "id");
    out.push_back({id.is_string() ? id.get<std::string>() : id.dump(), vertices_from_json(member(c, "vertices"))});
  }
  return out;
}

Json curves_to_json(const std::vector<DoubleGroundedCurve>& curves) {
  Json arr = Json::array();
  for (const auto& c : curves) arr.push_back({{"id", c.id}, {"vertices", vertices_to_json(c.vertices)}});
  return {{"curves", arr}};
}

Json solution_to_json(const Solution& s) {
  Json out;
  out["feasible"] = s.feasible();
  switch (s.kind) {
    case SolutionKind::VertexSet: out["vertices"] = s.vertices; break;
    case SolutionKind::EdgeSet: {
      Json edges = Json::array();
      for (const auto& [u, v] : s.edges) edges.push_back({u, v});
      out["edges"] = edges;
      break;
    }
    case SolutionKind::CycleSet: out["cycles"] = s.cycles; break;
    case SolutionKind::Coloring: out["colors"] = s.colors; break;
    case SolutionKind::Infeasible: break;
  }
  if (s.feasible()) out["value"] = s.value();
  return out;
}

}  // namespace outerstring
