#pragma once

#include <optional>
#include <vector>

#include "splitalg/builders.hpp"
#include "splitalg/dual.hpp"

namespace splitalg {

// Sign function on admissible monomials of a surface graph, flipping
// under every k-conjugation. The sign of a chain is the product of local
// signs of its consecutive pairs (and of the pair formed with the
// context's bottom vertex): a (face, edge) pair contributes +1 when the
// face's induced direction runs tail -> head, an (edge, point) pair
// contributes +1 when the point is the edge's head label.
class Orientation {
public:
  explicit Orientation(const SurfaceModel& model) : model_(&model) {}

  // Sign of m within the context whose bottom is `bottom`.
  int sign(const Chain& m, int bottom) const;

private:
  int pair_sign(int upper, int lower) const;
  const SurfaceModel* model_;
};

// The unique monomial differing from m exactly at position k within the
// (top, bottom) context. Throws when no alternative exists (the monomial
// was not admissible) or when the alternative is not unique (the graph
// is outside the surface setting this machinery is built for).
Chain conjugate(const LayeredGraph& g, const Chain& m, size_t k, int bottom);

struct OrbitDecomposition {
  std::vector<std::vector<Chain>> orbits;
  // Per-orbit signed sums; filled only when an orientation is supplied.
  std::vector<ChainVector> signed_sums;
  int admissible_count = 0;
  int kernel_dimension = 0;
  bool matches_kernel = false;  // orbit count == kernel dimension
};

// Partition of A(v, w) into conjugation orbits; requires
// level(v) - level(w) >= 2.
OrbitDecomposition orbit_decomposition(const LayeredGraph& g, int v, int w,
                                       const Orientation* orientation = nullptr);

// Lemma-5.3-style check: single orbit for every (F,*), (M,w), (M,*).
bool transitivity_check(const SurfaceModel& model);

struct FunctionalSpanReport {
  int dim_g = 0;       // nullity of the face-constraint system on edges
  int g_count = 0;     // |V_1|
  bool dim_is_g_minus_1 = false;
  bool q_vectors_in_g = false;   // every q_w satisfies all face constraints
  bool g_in_span_q = false;      // the null space lies in span{q_w}
};

// Face-constraint functionals on edges and the q_w spanning check.
FunctionalSpanReport functional_span_check(const SurfaceModel& model);

}  // namespace splitalg
