#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splitalg {

// Fixed-capacity bitset sized at construction.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  size_t size() const { return bits_; }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void or_with(const Bitset& other) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  bool intersects(const Bitset& other) const {
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }
  size_t count() const;

private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

// Unvalidated vertex/edge lists as parsed from input.
struct RawGraph {
  std::vector<std::pair<std::string, int>> vertices;  // (id, level)
  std::vector<std::pair<std::string, std::string>> edges;  // (tail, head)
};

struct ValidationIssue {
  enum class Kind {
    NonLayeredEdge,
    MultipleMinima,
    NoMinimum,
    DanglingVertex,
    DuplicateEdge,
    DuplicateVertex,
    UnknownEndpoint,
    NegativeLevel,
    EmptyLevel,
  };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// A validated layered graph: levels 0..height, edges drop exactly one
// level, unique level-0 vertex `*`, every vertex of level >= 1 has an
// out-edge, no level is empty. Immutable after construction.
class LayeredGraph {
public:
  // Checks every axiom and reports all violations.
  static ValidationReport validate(const RawGraph& raw);
  // Builds a graph; throws Error(Invalid) carrying the report on failure.
  static LayeredGraph build(const RawGraph& raw);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int height() const { return height_; }
  int level(int v) const { return levels_[static_cast<size_t>(v)]; }
  const std::string& id(int v) const { return ids_[static_cast<size_t>(v)]; }
  int min_vertex() const { return min_vertex_; }
  std::optional<int> find(const std::string& id) const;

  const std::vector<int>& children(int v) const {
    return children_[static_cast<size_t>(v)];
  }
  const std::vector<int>& parents(int v) const {
    return parents_[static_cast<size_t>(v)];
  }
  const std::vector<int>& level_vertices(int level) const {
    return by_level_[static_cast<size_t>(level)];
  }
  int edge_count() const { return edge_count_; }

  // The unique maximal vertex, if there is exactly one vertex with no
  // in-edges.
  std::optional<int> unique_top() const;

  RawGraph to_raw() const;

private:
  std::vector<std::string> ids_;
  std::vector<int> levels_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> by_level_;
  int min_vertex_ = -1;
  int height_ = 0;
  int edge_count_ = 0;
};

// Transitive closure of the cover relation: reach(v) holds every vertex
// strictly below v.
class CoverClosure {
public:
  explicit CoverClosure(const LayeredGraph& g);

  bool less(int lo, int hi) const {  // lo < hi in the order
    return reach_[static_cast<size_t>(hi)].test(static_cast<size_t>(lo));
  }
  const Bitset& reach(int v) const { return reach_[static_cast<size_t>(v)]; }

private:
  std::vector<Bitset> reach_;
};

struct UniformityWitness {
  int vertex;
  std::vector<int> class_a;
  std::vector<int> class_b;
};

// Definition 1.1 check: for every vertex of level >= 2, the covers form
// a single class under "shares a common cover-of-cover".
bool is_uniform(const LayeredGraph& g,
                std::optional<UniformityWitness>* witness = nullptr);

// Mobius function mu(y, x) of the order interval [y, x]; requires x >= y.
// Throws Error(Argument) when x and y are not comparable.
mpz_class mobius(const LayeredGraph& g, const CoverClosure& cl, int x, int y);

}  // namespace splitalg
