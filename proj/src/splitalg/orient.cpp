#include "splitalg/orient.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "splitalg/error.hpp"
#include "splitalg/linalg.hpp"

namespace splitalg {

int Orientation::pair_sign(int upper, int lower) const {
  const LayeredGraph& g = model_->graph;
  int lu = g.level(upper), ll = g.level(lower);
  if (lu == 3 && ll == 2) {
    auto it = model_->face_edge_dir.find({upper, lower});
    if (it == model_->face_edge_dir.end())
      throw Error(ErrorKind::Argument, "NotSurfaceGraph: no face/edge incidence");
    return it->second;
  }
  if (lu == 2 && ll == 1) {
    auto it = model_->edge_ends.find(upper);
    if (it == model_->edge_ends.end())
      throw Error(ErrorKind::Argument, "NotSurfaceGraph: unknown edge");
    if (lower == it->second.second) return 1;
    if (lower == it->second.first) return -1;
    throw Error(ErrorKind::Argument, "NotSurfaceGraph: point not on edge");
  }
  return 1;  // (M, face) and (point, *) pairs carry no sign
}

int Orientation::sign(const Chain& m, int bottom) const {
  int s = 1;
  for (size_t i = 0; i + 1 < m.size(); ++i) s *= pair_sign(m[i], m[i + 1]);
  if (bottom != model_->graph.min_vertex()) s *= pair_sign(m.back(), bottom);
  return s;
}

Chain conjugate(const LayeredGraph& g, const Chain& m, size_t k, int bottom) {
  std::optional<int> b;
  if (bottom >= 0) b = bottom;
  std::vector<int> alts = position_alternatives(g, m, k, b);
  if (alts.empty())
    throw Error(ErrorKind::Argument, "NotAdmissible: no conjugate at position " +
                                         std::to_string(k));
  if (alts.size() > 1)
    throw Error(ErrorKind::Argument,
                "conjugate not unique (graph is not in the surface setting)");
  Chain out = m;
  out[k] = alts[0];
  return out;
}

OrbitDecomposition orbit_decomposition(const LayeredGraph& g, int v, int w,
                                       const Orientation* orientation) {
  int gap = g.level(v) - g.level(w);
  if (gap < 2)
    throw Error(ErrorKind::Argument, "orbit context needs level gap >= 2");
  std::vector<Chain> adm = enumerate_admissible(g, v, gap, w);

  OrbitDecomposition out;
  out.admissible_count = static_cast<int>(adm.size());
  if (!adm.empty())
    out.kernel_dimension = kernel_dim(deletion_system(g, adm, gap));

  std::map<Chain, size_t> index;
  for (size_t i = 0; i < adm.size(); ++i) index.emplace(adm[i], i);
  std::vector<bool> seen(adm.size(), false);
  for (size_t start = 0; start < adm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Chain> orbit;
    std::deque<size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      orbit.push_back(adm[cur]);
      for (size_t k = 1; k < adm[cur].size(); ++k) {
        Chain conj = conjugate(g, adm[cur], k, w);
        auto it = index.find(conj);
        if (it == index.end())
          throw Error(ErrorKind::Internal, "conjugate left the admissible set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (orientation) {
      ChainVector sum;
      for (const Chain& m : orbit)
        sum.emplace_back(m, mpq_class(orientation->sign(m, w)));
      out.signed_sums.push_back(std::move(sum));
    }
    out.orbits.push_back(std::move(orbit));
  }
  out.matches_kernel =
      static_cast<int>(out.orbits.size()) == out.kernel_dimension;
  return out;
}

bool transitivity_check(const SurfaceModel& model) {
  const LayeredGraph& g = model.graph;
  int star = g.min_vertex();
  for (int f : g.level_vertices(3))
    if (orbit_decomposition(g, f, star).orbits.size() != 1) return false;
  for (int w : g.level_vertices(1))
    if (orbit_decomposition(g, model.top, w).orbits.size() != 1) return false;
  return orbit_decomposition(g, model.top, star).orbits.size() == 1;
}

FunctionalSpanReport functional_span_check(const SurfaceModel& model) {
  const LayeredGraph& g = model.graph;
  const std::vector<int>& edges = g.level_vertices(2);
  std::map<int, int> col;
  for (size_t i = 0; i < edges.size(); ++i)
    col.emplace(edges[i], static_cast<int>(i));

  // One constraint per face: sum of o(F,e) alpha(e) over incident edges.
  const std::vector<int>& faces = g.level_vertices(3);
  ExactMatrix constraints(static_cast<int>(faces.size()),
                          static_cast<int>(edges.size()));
  for (size_t r = 0; r < faces.size(); ++r)
    for (int e : g.children(faces[r]))
      constraints.add(static_cast<int>(r), col.at(e),
                      mpq_class(model.face_edge_dir.at({faces[r], e})));

  FunctionalSpanReport rep;
  rep.g_count = static_cast<int>(g.level_vertices(1).size());
  std::vector<std::vector<mpq_class>> null_basis = kernel_basis(constraints);
  rep.dim_g = static_cast<int>(null_basis.size());
  rep.dim_is_g_minus_1 = rep.dim_g == rep.g_count - 1;

  // q_w = sum of e* over edges with tail w minus those with head w.
  std::vector<std::vector<mpq_class>> q_vectors;
  for (int w : g.level_vertices(1)) {
    std::vector<mpq_class> q(edges.size(), mpq_class(0));
    for (const auto& [e, ends] : model.edge_ends) {
      if (ends.first == w) q[static_cast<size_t>(col.at(e))] += 1;
      if (ends.second == w) q[static_cast<size_t>(col.at(e))] -= 1;
    }
    q_vectors.push_back(std::move(q));
  }

  rep.q_vectors_in_g = true;
  for (const auto& q : q_vectors) {
    for (size_t r = 0; r < faces.size(); ++r) {
      mpq_class acc(0);
      for (const auto& [c, val] : constraints.row(static_cast<int>(r)))
        acc += val * q[static_cast<size_t>(c)];
      if (acc != 0) rep.q_vectors_in_g = false;
    }
  }

  int rank_q = rank_of_vectors(q_vectors, static_cast<int>(edges.size()));
  std::vector<std::vector<mpq_class>> both = q_vectors;
  both.insert(both.end(), null_basis.begin(), null_basis.end());
  rep.g_in_span_q =
      rank_of_vectors(both, static_cast<int>(edges.size())) == rank_q;
  return rep;
}

}  // namespace splitalg
