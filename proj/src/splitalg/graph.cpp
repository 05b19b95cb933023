#include "splitalg/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "splitalg/error.hpp"

namespace splitalg {

size_t Bitset::count() const {
  size_t n = 0;
  for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
  return n;
}

namespace {

const char* issue_name(ValidationIssue::Kind k) {
  switch (k) {
    case ValidationIssue::Kind::NonLayeredEdge: return "NonLayeredEdge";
    case ValidationIssue::Kind::MultipleMinima: return "MultipleMinima";
    case ValidationIssue::Kind::NoMinimum: return "NoMinimum";
    case ValidationIssue::Kind::DanglingVertex: return "DanglingVertex";
    case ValidationIssue::Kind::DuplicateEdge: return "DuplicateEdge";
    case ValidationIssue::Kind::DuplicateVertex: return "DuplicateVertex";
    case ValidationIssue::Kind::UnknownEndpoint: return "UnknownEndpoint";
    case ValidationIssue::Kind::NegativeLevel: return "NegativeLevel";
    case ValidationIssue::Kind::EmptyLevel: return "EmptyLevel";
  }
  return "?";
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issue_name(issues[i].kind) << ": " << issues[i].detail;
  }
  return os.str();
}

ValidationReport LayeredGraph::validate(const RawGraph& raw) {
  ValidationReport rep;
  auto add = [&rep](ValidationIssue::Kind k, std::string d) {
    rep.issues.push_back({k, std::move(d)});
  };

  std::unordered_map<std::string, int> level_of;
  for (const auto& [id, level] : raw.vertices) {
    if (level_of.count(id)) {
      add(ValidationIssue::Kind::DuplicateVertex, id);
      continue;
    }
    if (level < 0) add(ValidationIssue::Kind::NegativeLevel, id);
    level_of.emplace(id, level);
  }

  std::vector<std::string> minima;
  int max_level = 0;
  for (const auto& [id, level] : level_of) {
    if (level == 0) minima.push_back(id);
    max_level = std::max(max_level, level);
  }
  std::sort(minima.begin(), minima.end());
  if (minima.empty()) {
    add(ValidationIssue::Kind::NoMinimum, "no level-0 vertex");
  } else if (minima.size() > 1) {
    std::string list;
    for (const auto& m : minima) list += (list.empty() ? "" : ",") + m;
    add(ValidationIssue::Kind::MultipleMinima, list);
  }

  std::set<std::pair<std::string, std::string>> seen_edges;
  std::set<std::string> has_out;
  for (const auto& [tail, head] : raw.edges) {
    auto ti = level_of.find(tail);
    auto hi = level_of.find(head);
    if (ti == level_of.end()) {
      add(ValidationIssue::Kind::UnknownEndpoint, tail);
      continue;
    }
    if (hi == level_of.end()) {
      add(ValidationIssue::Kind::UnknownEndpoint, head);
      continue;
    }
    if (!seen_edges.insert({tail, head}).second) {
      add(ValidationIssue::Kind::DuplicateEdge, tail + " -> " + head);
      continue;
    }
    if (ti->second != hi->second + 1)
      add(ValidationIssue::Kind::NonLayeredEdge, tail + " -> " + head);
    has_out.insert(tail);
  }

  for (const auto& [id, level] : level_of)
    if (level >= 1 && !has_out.count(id))
      add(ValidationIssue::Kind::DanglingVertex, id);

  if (!level_of.empty()) {
    std::vector<int> per_level(static_cast<size_t>(max_level) + 1, 0);
    for (const auto& [id, level] : level_of)
      if (level >= 0) ++per_level[static_cast<size_t>(level)];
    for (int i = 0; i <= max_level; ++i)
      if (per_level[static_cast<size_t>(i)] == 0)
        add(ValidationIssue::Kind::EmptyLevel, std::to_string(i));
  }

  return rep;
}

LayeredGraph LayeredGraph::build(const RawGraph& raw) {
  ValidationReport rep = validate(raw);
  if (!rep.ok()) throw Error(ErrorKind::Invalid, rep.to_string());

  LayeredGraph g;
  // Canonical vertex order: (level, id).
  std::vector<std::pair<std::string, int>> verts = raw.vertices;
  std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::unordered_map<std::string, int> index;
  for (const auto& [id, level] : verts) {
    index.emplace(id, static_cast<int>(g.ids_.size()));
    g.ids_.push_back(id);
    g.levels_.push_back(level);
    g.height_ = std::max(g.height_, level);
  }
  g.min_vertex_ = 0;  // level 0 sorts first and is unique
  g.children_.resize(g.ids_.size());
  g.parents_.resize(g.ids_.size());
  g.by_level_.resize(static_cast<size_t>(g.height_) + 1);
  for (int v = 0; v < g.vertex_count(); ++v)
    g.by_level_[static_cast<size_t>(g.levels_[static_cast<size_t>(v)])]
        .push_back(v);
  for (const auto& [tail, head] : raw.edges) {
    int t = index.at(tail), h = index.at(head);
    g.children_[static_cast<size_t>(t)].push_back(h);
    g.parents_[static_cast<size_t>(h)].push_back(t);
    ++g.edge_count_;
  }
  for (auto& c : g.children_) std::sort(c.begin(), c.end());
  for (auto& p : g.parents_) std::sort(p.begin(), p.end());
  return g;
}

std::optional<int> LayeredGraph::find(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (ids_[static_cast<size_t>(v)] == id) return v;
  return std::nullopt;
}

std::optional<int> LayeredGraph::unique_top() const {
  std::optional<int> top;
  for (int v = 0; v < vertex_count(); ++v) {
    if (parents_[static_cast<size_t>(v)].empty() && v != min_vertex_) {
      if (top) return std::nullopt;
      top = v;
    }
  }
  if (vertex_count() == 1) return min_vertex_;
  return top;
}

RawGraph LayeredGraph::to_raw() const {
  RawGraph raw;
  for (int v = 0; v < vertex_count(); ++v)
    raw.vertices.emplace_back(id(v), level(v));
  for (int v = 0; v < vertex_count(); ++v)
    for (int c : children(v)) raw.edges.emplace_back(id(v), id(c));
  return raw;
}

CoverClosure::CoverClosure(const LayeredGraph& g) {
  size_t n = static_cast<size_t>(g.vertex_count());
  reach_.assign(n, Bitset(n));
  // Level order: a vertex's reach is the union of its children and
  // their reaches.
  for (int lev = 1; lev <= g.height(); ++lev) {
    for (int v : g.level_vertices(lev)) {
      Bitset& r = reach_[static_cast<size_t>(v)];
      for (int c : g.children(v)) {
        r.set(static_cast<size_t>(c));
        r.or_with(reach_[static_cast<size_t>(c)]);
      }
    }
  }
}

bool is_uniform(const LayeredGraph& g,
                std::optional<UniformityWitness>* witness) {
  size_t n = static_cast<size_t>(g.vertex_count());
  // Per-vertex cover bitsets, for fast S_-(u) intersection tests.
  std::vector<Bitset> covers(n, Bitset(n));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int c : g.children(v))
      covers[static_cast<size_t>(v)].set(static_cast<size_t>(c));

  for (int lev = 2; lev <= g.height(); ++lev) {
    for (int v : g.level_vertices(lev)) {
      const auto& cs = g.children(v);
      std::vector<int> comp(cs.size());
      for (size_t i = 0; i < cs.size(); ++i) comp[i] = static_cast<int>(i);
      std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x)
          x = comp[static_cast<size_t>(x)] =
              comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
        return x;
      };
      for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
          if (covers[static_cast<size_t>(cs[i])].intersects(
                  covers[static_cast<size_t>(cs[j])]))
            comp[static_cast<size_t>(find(static_cast<int>(j)))] =
                find(static_cast<int>(i));
      int root0 = cs.empty() ? -1 : find(0);
      for (size_t i = 1; i < cs.size(); ++i) {
        if (find(static_cast<int>(i)) != root0) {
          if (witness) {
            UniformityWitness w;
            w.vertex = v;
            for (size_t j = 0; j < cs.size(); ++j)
              (find(static_cast<int>(j)) == root0 ? w.class_a : w.class_b)
                  .push_back(cs[j]);
            *witness = std::move(w);
          }
          return false;
        }
      }
    }
  }
  return true;
}

mpz_class mobius(const LayeredGraph& g, const CoverClosure& cl, int x, int y) {
  if (x != y && !cl.less(y, x))
    throw Error(ErrorKind::Argument,
                "mobius: " + g.id(x) + " and " + g.id(y) + " not comparable");
  if (x == y) return 1;
  // Interval [y, x], processed bottom-up by level.
  std::vector<int> interval;
  for (int z = 0; z < g.vertex_count(); ++z)
    if (z == y || (cl.less(y, z) && cl.less(z, x))) interval.push_back(z);
  std::sort(interval.begin(), interval.end(),
            [&g](int a, int b) { return g.level(a) < g.level(b); });
  std::map<int, mpz_class> mu;
  for (int z : interval) {
    if (z == y) {
      mu[z] = 1;
      continue;
    }
    mpz_class acc(0);
    for (int w : interval)
      if (w == y || (w != z && cl.less(w, z))) acc += mu.at(w);
    mu[z] = -acc;
  }
  mpz_class acc(0);
  for (int z : interval) acc += mu.at(z);
  return -acc;
}

}  // namespace splitalg
