#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitalg/builders.hpp"
#include "splitalg/graph.hpp"
#include "splitalg/linalg.hpp"
#include "splitalg/polynomial.hpp"

namespace splitalg {

// A linked monomial: a cover chain of vertices, top first. The minimal
// vertex * never appears as a factor; a monomial "to w" ends at a vertex
// covering w, and "to *" means it ends at level 1.
using Chain = std::vector<int>;

// A rational combination of chains of one common length.
using ChainVector = std::vector<std::pair<Chain, mpq_class>>;

// All cover chains of `length` vertices starting at v. With a bottom w,
// only chains whose last vertex covers w are kept (and the length is
// forced to level(v) - level(w)); bottom = the minimal vertex selects
// chains ending at level 1.
std::vector<Chain> enumerate_linked(const LayeredGraph& g, int v, int length,
                                    std::optional<int> bottom = std::nullopt);

// The admissible subset: every position past the first admits an
// alternative vertex keeping the chain linked (and keeping the bottom
// condition when one is fixed).
std::vector<Chain> enumerate_admissible(const LayeredGraph& g, int v,
                                        int length,
                                        std::optional<int> bottom = std::nullopt);

// Vertices u != chain[pos] that can replace position pos (1 <= pos <
// length) while keeping the chain linked and the bottom condition.
std::vector<int> position_alternatives(const LayeredGraph& g, const Chain& m,
                                       size_t pos,
                                       std::optional<int> bottom = std::nullopt);

// Stacked matrix of the k-1 "delete factor at position p" maps
// (p = 1..k-1), columns indexed by the given monomials in order. The
// kernel of this matrix is the relation intersection within the span.
ExactMatrix deletion_system(const LayeredGraph& g,
                            const std::vector<Chain>& monomials, int k);

// dim R_v^{(k)}: nullity of the deletion system over the admissible
// monomials starting at v.
int dual_component_dim(const LayeredGraph& g, int v, int k,
                       EliminationMode mode = EliminationMode::Rational);

// H(A^!, z) = sum_k dim R^{(k)} z^k. Sets *uniform_warning when the
// graph is not uniform (the quadratic presentation is then unjustified).
IntPolynomial dual_hilbert(const LayeredGraph& g,
                           EliminationMode mode = EliminationMode::Rational,
                           bool* uniform_warning = nullptr);

// True iff the combination lies in R^{(k)}. All chains must share the
// top vertex and have length k.
bool membership(const LayeredGraph& g, const ChainVector& combination, int k);

// The signed permutation sum S(A:B) over the monomial basis of the
// simplicial graph: factors A, A minus one element of B, ... (|B|
// factors in total). Requires B subset of A with min(A) not in B.
ChainVector simplicial_sab(const SimplicialModel& model,
                           const std::vector<int>& face_a,
                           const std::vector<int>& subset_b);

}  // namespace splitalg
