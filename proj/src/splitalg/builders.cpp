#include "splitalg/builders.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "splitalg/error.hpp"

namespace splitalg {

namespace {

using nlohmann::json;

std::string id_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::Parse, "expected a string or integer id, got " + j.dump());
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace

LayeredGraph build_complete(const std::vector<int>& sizes) {
  if (sizes.empty() || sizes[0] != 1)
    throw Error(ErrorKind::Argument, "BadBottom: sizes[0] must be 1");
  for (int s : sizes)
    if (s <= 0) throw Error(ErrorKind::Argument, "level sizes must be positive");
  RawGraph raw;
  auto name = [](int lev, int k) {
    return lev == 0 ? std::string("*")
                    : "L" + std::to_string(lev) + "_" + std::to_string(k + 1);
  };
  for (size_t lev = 0; lev < sizes.size(); ++lev)
    for (int k = 0; k < sizes[lev]; ++k)
      raw.vertices.emplace_back(name(static_cast<int>(lev), k),
                                static_cast<int>(lev));
  for (size_t lev = 1; lev < sizes.size(); ++lev)
    for (int a = 0; a < sizes[lev]; ++a)
      for (int b = 0; b < sizes[lev - 1]; ++b)
        raw.edges.emplace_back(name(static_cast<int>(lev), a),
                               name(static_cast<int>(lev) - 1, b));
  return LayeredGraph::build(raw);
}

SimplicialComplex SimplicialComplex::make(
    const std::vector<std::string>& ground,
    const std::vector<std::vector<std::string>>& faces, bool strict,
    int* completed) {
  SimplicialComplex cx;
  cx.ground = ground;
  std::map<std::string, int> index;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (!index.emplace(ground[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::Invalid, "duplicate ground element " + ground[i]);
  }
  cx.faces.insert(std::vector<int>{});  // empty face
  for (size_t i = 0; i < ground.size(); ++i)
    cx.faces.insert({static_cast<int>(i)});
  for (const auto& face : faces) {
    std::vector<int> f;
    for (const auto& el : face) {
      auto it = index.find(el);
      if (it == index.end())
        throw Error(ErrorKind::Invalid, "face element not in ground set: " + el);
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    cx.faces.insert(std::move(f));
  }
  // Downward closure.
  int added = 0;
  std::deque<std::vector<int>> queue(cx.faces.begin(), cx.faces.end());
  while (!queue.empty()) {
    std::vector<int> f = std::move(queue.front());
    queue.pop_front();
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<int> sub;
      sub.reserve(f.size() - 1);
      for (size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      if (cx.faces.insert(sub).second) {
        if (strict)
          throw Error(ErrorKind::Invalid,
                      "NotDownwardClosed: missing face " + cx.face_id(sub));
        ++added;
        queue.push_back(std::move(sub));
      }
    }
  }
  if (completed) *completed = added;
  return cx;
}

std::string SimplicialComplex::face_id(const std::vector<int>& face) const {
  std::string out = "{";
  for (size_t i = 0; i < face.size(); ++i) {
    if (i) out += ",";
    out += ground[static_cast<size_t>(face[i])];
  }
  return out + "}";
}

SimplicialModel build_simplicial(const SimplicialComplex& complex,
                                 bool add_top) {
  RawGraph raw;
  size_t max_card = 0;
  for (const auto& f : complex.faces) {
    raw.vertices.emplace_back(complex.face_id(f), static_cast<int>(f.size()));
    max_card = std::max(max_card, f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<int> sub;
      for (size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      raw.edges.emplace_back(complex.face_id(f), complex.face_id(sub));
    }
  }
  if (add_top) {
    raw.vertices.emplace_back("M", static_cast<int>(max_card) + 1);
    for (const auto& f : complex.faces)
      if (f.size() == max_card) raw.edges.emplace_back("M", complex.face_id(f));
  }
  SimplicialModel model;
  model.graph = LayeredGraph::build(raw);
  model.complex = complex;
  model.has_top = add_top;
  for (const auto& f : complex.faces)
    model.face_vertex.emplace(f, *model.graph.find(complex.face_id(f)));
  return model;
}

SurfaceModel build_surface(const std::vector<std::vector<std::string>>& faces) {
  if (faces.empty()) throw Error(ErrorKind::Invalid, "surface has no faces");
  using Pair = std::pair<std::string, std::string>;
  struct Incidence {
    size_t face;
    bool forward;  // traversed tail -> head in the given cyclic order
  };
  auto canon = [](const std::string& a, const std::string& b) {
    return a < b ? Pair(a, b) : Pair(b, a);
  };

  std::map<Pair, std::vector<Incidence>> edges;
  std::set<std::string> vertex_names;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& face = faces[fi];
    if (face.size() < 3)
      throw Error(ErrorKind::Invalid,
                  "face " + std::to_string(fi + 1) + " has fewer than 3 vertices");
    for (size_t i = 0; i < face.size(); ++i) {
      const std::string& a = face[i];
      const std::string& b = face[(i + 1) % face.size()];
      if (a == b)
        throw Error(ErrorKind::Invalid, "LoopEdge: edge at vertex " + a);
      vertex_names.insert(a);
      edges[canon(a, b)].push_back({fi, a < b});
    }
  }
  for (const auto& [pair, inc] : edges) {
    if (inc.size() != 2 || inc[0].face == inc[1].face)
      throw Error(ErrorKind::Invalid, "EdgeNotOnTwoFaces: (" + pair.first +
                                          "," + pair.second + ")");
  }
  for (const auto& name : vertex_names) {
    bool face_like = name.size() > 1 && name[0] == 'F' &&
                     std::all_of(name.begin() + 1, name.end(),
                                 [](char c) { return c >= '0' && c <= '9'; });
    if (name == "M" || name == "*" || face_like ||
        name.find(',') != std::string::npos)
      throw Error(ErrorKind::Invalid, "reserved vertex name: " + name);
  }

  // Face adjacency: connectivity + global orientation by sign propagation.
  std::vector<int> sign(faces.size(), 0);
  sign[0] = 1;
  std::deque<size_t> queue{0};
  size_t seen = 1;
  while (!queue.empty()) {
    size_t f = queue.front();
    queue.pop_front();
    for (const auto& [pair, inc] : edges) {
      if (inc[0].face != f && inc[1].face != f) continue;
      const Incidence& mine = inc[0].face == f ? inc[0] : inc[1];
      const Incidence& other = inc[0].face == f ? inc[1] : inc[0];
      // Opposite induced directions: signs differ iff traversals agree.
      int want = (mine.forward == other.forward) ? -sign[f] : sign[f];
      if (sign[other.face] == 0) {
        sign[other.face] = want;
        ++seen;
        queue.push_back(other.face);
      } else if (sign[other.face] != want) {
        throw Error(ErrorKind::Invalid, "NonOrientable");
      }
    }
  }
  if (seen != faces.size()) throw Error(ErrorKind::Invalid, "Disconnected");

  RawGraph raw;
  raw.vertices.emplace_back("*", 0);
  for (const auto& name : vertex_names) raw.vertices.emplace_back(name, 1);
  auto edge_id = [](const Pair& p) { return p.first + "," + p.second; };
  for (const auto& [pair, inc] : edges) {
    raw.vertices.emplace_back(edge_id(pair), 2);
    raw.edges.emplace_back(edge_id(pair), pair.first);
    raw.edges.emplace_back(edge_id(pair), pair.second);
  }
  for (const auto& name : vertex_names) raw.edges.emplace_back(name, "*");
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    std::string fid = "F" + std::to_string(fi + 1);
    raw.vertices.emplace_back(fid, 3);
    std::set<Pair> face_edges;
    for (size_t i = 0; i < faces[fi].size(); ++i)
      face_edges.insert(
          canon(faces[fi][i], faces[fi][(i + 1) % faces[fi].size()]));
    for (const auto& pair : face_edges)
      raw.edges.emplace_back(fid, edge_id(pair));
  }
  raw.vertices.emplace_back("M", 4);
  for (size_t fi = 0; fi < faces.size(); ++fi)
    raw.edges.emplace_back("M", "F" + std::to_string(fi + 1));

  SurfaceModel model;
  model.graph = LayeredGraph::build(raw);
  model.top = *model.graph.find("M");
  model.g_count = static_cast<int>(vertex_names.size());
  model.h_count = static_cast<int>(edges.size());
  model.f_count = static_cast<int>(faces.size());

  for (const auto& [pair, inc] : edges) {
    int ev = *model.graph.find(edge_id(pair));
    model.edge_ends.emplace(
        ev, std::make_pair(*model.graph.find(pair.first),
                           *model.graph.find(pair.second)));
    for (const Incidence& in : inc) {
      int fv = *model.graph.find("F" + std::to_string(in.face + 1));
      // Induced direction after the global orientation flip.
      bool tail_to_head = in.forward == (sign[in.face] > 0);
      model.face_edge_dir.emplace(std::make_pair(fv, ev),
                                  tail_to_head ? 1 : -1);
    }
  }
  return model;
}

CellPosetModel build_cell_poset(const CellPosetInput& input) {
  if (input.dim < 0) throw Error(ErrorKind::Argument, "negative dimension");
  RawGraph raw;
  std::map<std::string, int> dim_of;
  for (const auto& [id, d] : input.cells) {
    if (d < 0 || d > input.dim)
      throw Error(ErrorKind::Invalid,
                  "RankViolation: cell " + id + " has dimension " +
                      std::to_string(d) + " outside [0," +
                      std::to_string(input.dim) + "]");
    if (id == "M" || id == "*")
      throw Error(ErrorKind::Invalid, "reserved cell name: " + id);
    dim_of.emplace(id, d);
    raw.vertices.emplace_back(id, d + 1);
  }
  for (const auto& [upper, lower] : input.covers) {
    auto ui = dim_of.find(upper), li = dim_of.find(lower);
    if (ui == dim_of.end() || li == dim_of.end())
      throw Error(ErrorKind::Invalid, "cover references unknown cell");
    if (ui->second != li->second + 1)
      throw Error(ErrorKind::Invalid,
                  "RankViolation: cover " + upper + " -> " + lower);
    raw.edges.emplace_back(upper, lower);
  }
  raw.vertices.emplace_back("*", 0);
  for (const auto& [id, d] : dim_of)
    if (d == 0) raw.edges.emplace_back(id, "*");
  raw.vertices.emplace_back("M", input.dim + 2);
  for (const auto& [id, d] : dim_of)
    if (d == input.dim) raw.edges.emplace_back("M", id);

  CellPosetModel model;
  model.graph = LayeredGraph::build(raw);
  model.chi = 0;
  for (const auto& [id, d] : dim_of) model.chi += (d % 2 == 0) ? 1 : -1;
  return model;
}

LayeredGraph build_cassidy_shelton() {
  RawGraph raw;
  raw.vertices.emplace_back("*", 0);
  for (int i = 1; i <= 3; ++i) {
    raw.vertices.emplace_back("y" + std::to_string(i), 1);
    raw.vertices.emplace_back("x" + std::to_string(i), 2);
    raw.vertices.emplace_back("w" + std::to_string(i), 3);
  }
  raw.vertices.emplace_back("u", 4);
  for (int i = 1; i <= 3; ++i) {
    raw.edges.emplace_back("u", "w" + std::to_string(i));
    raw.edges.emplace_back("y" + std::to_string(i), "*");
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      raw.edges.emplace_back("w" + std::to_string(i), "x" + std::to_string(j));
      raw.edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(j));
    }
  }
  return LayeredGraph::build(raw);
}

RawGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(ErrorKind::Parse, "graph JSON needs 'vertices' and 'edges'");
  RawGraph raw;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("id") || !v.contains("level"))
      throw Error(ErrorKind::Parse, "vertex needs 'id' and 'level': " + v.dump());
    if (!v.at("level").is_number_integer())
      throw Error(ErrorKind::Parse, "vertex level must be an integer: " + v.dump());
    raw.vertices.emplace_back(id_of(v.at("id")), v.at("level").get<int>());
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::Parse, "edge must be a [tail, head] pair: " + e.dump());
    raw.edges.emplace_back(id_of(e[0]), id_of(e[1]));
  }
  return raw;
}

LayeredGraph load_graph_json(const std::string& text) {
  return LayeredGraph::build(graph_from_json(text));
}

std::string graph_to_json(const LayeredGraph& g) {
  json verts = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    verts.push_back({{"id", g.id(v)}, {"level", g.level(v)}});
  json edges = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int c : g.children(v)) edges.push_back({g.id(v), g.id(c)});
  return json{{"vertices", verts}, {"edges", edges}}.dump(2) + "\n";
}

SurfaceModel load_surface_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("faces"))
    throw Error(ErrorKind::Parse, "surface JSON needs 'faces'");
  std::vector<std::vector<std::string>> faces;
  for (const auto& f : j.at("faces")) {
    std::vector<std::string> face;
    for (const auto& v : f) face.push_back(id_of(v));
    faces.push_back(std::move(face));
  }
  return build_surface(faces);
}

SimplicialModel load_simplicial_json(const std::string& text, bool add_top,
                                     bool strict) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("ground") || !j.contains("faces"))
    throw Error(ErrorKind::Parse, "simplicial JSON needs 'ground' and 'faces'");
  std::vector<std::string> ground;
  for (const auto& el : j.at("ground")) ground.push_back(id_of(el));
  std::vector<std::vector<std::string>> faces;
  for (const auto& f : j.at("faces")) {
    std::vector<std::string> face;
    for (const auto& el : f) face.push_back(id_of(el));
    faces.push_back(std::move(face));
  }
  return build_simplicial(SimplicialComplex::make(ground, faces, strict),
                          add_top);
}

CellPosetModel load_cell_poset_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("cells") || !j.contains("covers") ||
      !j.contains("dim"))
    throw Error(ErrorKind::Parse, "cell poset JSON needs 'dim', 'cells', 'covers'");
  CellPosetInput input;
  input.dim = j.at("dim").get<int>();
  for (const auto& c : j.at("cells"))
    input.cells.emplace_back(id_of(c.at("id")), c.at("dim").get<int>());
  for (const auto& cv : j.at("covers"))
    input.covers.emplace_back(id_of(cv[0]), id_of(cv[1]));
  return build_cell_poset(input);
}

}  // namespace splitalg
