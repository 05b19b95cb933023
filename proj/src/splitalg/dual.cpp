#include "splitalg/dual.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "splitalg/error.hpp"

namespace splitalg {

namespace {

void descend(const LayeredGraph& g, Chain& partial, int remaining,
             std::optional<int> bottom, std::vector<Chain>& out) {
  if (remaining == 0) {
    if (bottom) {
      int last = partial.back();
      const auto& cs = g.children(last);
      if (!std::binary_search(cs.begin(), cs.end(), *bottom)) return;
    }
    out.push_back(partial);
    return;
  }
  for (int c : g.children(partial.back())) {
    if (g.level(c) < 1) continue;  // * is never a factor
    partial.push_back(c);
    descend(g, partial, remaining - 1, bottom, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Chain> enumerate_linked(const LayeredGraph& g, int v, int length,
                                    std::optional<int> bottom) {
  if (length < 1 || length > g.level(v))
    throw Error(ErrorKind::Argument, "LengthExceedsLevel");
  if (bottom && g.level(v) - g.level(*bottom) != length)
    throw Error(ErrorKind::Argument,
                "bottom level inconsistent with chain length");
  std::vector<Chain> out;
  Chain partial{v};
  std::optional<int> effective_bottom = bottom;
  if (bottom && *bottom == g.min_vertex()) effective_bottom.reset();
  // Ending at level 1 is automatic when bottom is * and length = level(v).
  descend(g, partial, length - 1, effective_bottom, out);
  return out;
}

std::vector<int> position_alternatives(const LayeredGraph& g, const Chain& m,
                                       size_t pos, std::optional<int> bottom) {
  if (pos == 0 || pos >= m.size())
    throw Error(ErrorKind::Argument, "position out of range");
  std::vector<int> alts;
  for (int u : g.children(m[pos - 1])) {
    if (u == m[pos] || g.level(u) < 1) continue;
    if (pos + 1 < m.size()) {
      const auto& cs = g.children(u);
      if (!std::binary_search(cs.begin(), cs.end(), m[pos + 1])) continue;
    } else if (bottom && *bottom != g.min_vertex()) {
      const auto& cs = g.children(u);
      if (!std::binary_search(cs.begin(), cs.end(), *bottom)) continue;
    }
    alts.push_back(u);
  }
  return alts;
}

std::vector<Chain> enumerate_admissible(const LayeredGraph& g, int v,
                                        int length,
                                        std::optional<int> bottom) {
  std::vector<Chain> linked = enumerate_linked(g, v, length, bottom);
  std::vector<Chain> out;
  for (const Chain& m : linked) {
    bool ok = true;
    for (size_t p = 1; p < m.size() && ok; ++p)
      ok = !position_alternatives(g, m, p, bottom).empty();
    if (ok) out.push_back(m);
  }
  return out;
}

ExactMatrix deletion_system(const LayeredGraph& g,
                            const std::vector<Chain>& monomials, int k) {
  (void)g;
  if (k < 2) throw Error(ErrorKind::Argument, "deletion system needs k >= 2");
  for (const Chain& m : monomials)
    if (static_cast<int>(m.size()) != k)
      throw Error(ErrorKind::Argument, "MixedLengths");
  std::map<std::pair<int, Chain>, int> row_index;
  std::vector<std::pair<int, int>> entries;  // (row, col)
  for (size_t col = 0; col < monomials.size(); ++col) {
    const Chain& m = monomials[col];
    for (int p = 1; p < k; ++p) {
      Chain reduced;
      reduced.reserve(m.size() - 1);
      for (int i = 0; i < k; ++i)
        if (i != p) reduced.push_back(m[static_cast<size_t>(i)]);
      auto [it, inserted] = row_index.emplace(
          std::make_pair(p, std::move(reduced)),
          static_cast<int>(row_index.size()));
      entries.emplace_back(it->second, static_cast<int>(col));
    }
  }
  ExactMatrix mat(static_cast<int>(row_index.size()),
                  static_cast<int>(monomials.size()));
  for (const auto& [r, c] : entries) mat.add(r, c, mpq_class(1));
  return mat;
}

int dual_component_dim(const LayeredGraph& g, int v, int k,
                       EliminationMode mode) {
  if (k < 2 || k > g.level(v)) return 0;
  std::vector<Chain> adm = enumerate_admissible(g, v, k);
  if (adm.empty()) return 0;
  return kernel_dim(deletion_system(g, adm, k), mode);
}

IntPolynomial dual_hilbert(const LayeredGraph& g, EliminationMode mode,
                           bool* uniform_warning) {
  if (uniform_warning) *uniform_warning = !is_uniform(g);
  std::vector<mpz_class> coeffs(static_cast<size_t>(g.height()) + 1,
                                mpz_class(0));
  coeffs[0] = 1;
  if (g.height() >= 1) coeffs[1] = g.vertex_count() - 1;
  for (int k = 2; k <= g.height(); ++k)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.level(v) >= k)
        coeffs[static_cast<size_t>(k)] += dual_component_dim(g, v, k, mode);
  return IntPolynomial(std::move(coeffs));
}

bool membership(const LayeredGraph& g, const ChainVector& combination, int k) {
  if (combination.empty()) return true;
  int top = combination.front().first.empty() ? -1 : combination.front().first[0];
  for (const auto& [m, c] : combination) {
    if (static_cast<int>(m.size()) != k)
      throw Error(ErrorKind::Argument, "MixedLengths");
    if (m[0] != top) throw Error(ErrorKind::Argument, "MixedTopVertex");
    for (size_t i = 0; i + 1 < m.size(); ++i) {
      const auto& cs = g.children(m[i]);
      if (!std::binary_search(cs.begin(), cs.end(), m[i + 1]))
        throw Error(ErrorKind::Argument, "monomial is not linked");
    }
  }
  if (k == 1) return true;  // R^{(1)} = V
  for (int p = 1; p < k; ++p) {
    std::map<Chain, mpq_class> sums;
    for (const auto& [m, c] : combination) {
      Chain reduced;
      for (int i = 0; i < k; ++i)
        if (i != p) reduced.push_back(m[static_cast<size_t>(i)]);
      sums[reduced] += c;
    }
    for (const auto& [chain, total] : sums)
      if (total != 0) return false;
  }
  return true;
}

ChainVector simplicial_sab(const SimplicialModel& model,
                           const std::vector<int>& face_a,
                           const std::vector<int>& subset_b) {
  std::vector<int> a = face_a;
  std::sort(a.begin(), a.end());
  std::vector<int> b = subset_b;
  std::sort(b.begin(), b.end());
  if (!model.face_vertex.count(a))
    throw Error(ErrorKind::Argument, "A is not a face of the complex");
  if (b.empty()) throw Error(ErrorKind::Argument, "B must be nonempty");
  if (!std::includes(a.begin(), a.end(), b.begin(), b.end()))
    throw Error(ErrorKind::Argument, "B must be a subset of A");
  if (b.front() == a.front()) throw Error(ErrorKind::Argument, "MinInB");

  int k = static_cast<int>(b.size());
  std::map<Chain, mpq_class> acc;
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Parity of the permutation.
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)])
          ++inversions;
    int sign = inversions % 2 == 0 ? 1 : -1;

    Chain chain;
    std::vector<int> current = a;
    chain.push_back(model.face_vertex.at(current));
    for (int step = 0; step < k - 1; ++step) {
      int remove = b[static_cast<size_t>(perm[static_cast<size_t>(step)])];
      current.erase(std::find(current.begin(), current.end(), remove));
      chain.push_back(model.face_vertex.at(current));
    }
    acc[chain] += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));

  ChainVector out;
  for (auto& [chain, coeff] : acc)
    if (coeff != 0) out.emplace_back(chain, coeff);
  return out;
}

}  // namespace splitalg
