#include "splitalg/koszul.hpp"

#include <algorithm>
#include <map>

#include "splitalg/dual.hpp"
#include "splitalg/error.hpp"

namespace splitalg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::KoszulByProp61: return "Koszul_by_Prop6_1";
    case Verdict::KoszulByHeightLE4: return "Koszul_by_height_le4";
    case Verdict::NotNumericallyKoszul: return "NotNumericallyKoszul";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::pair<bool, IntPolynomial> numerical_koszul(const LayeredGraph& g,
                                                const CoverClosure& cl,
                                                EliminationMode mode) {
  IntPolynomial hinv = hilbert_inverse(g, cl);
  IntPolynomial dual = dual_hilbert(g, mode);
  IntPolynomial residual = hinv - dual.negate_variable();
  return {residual.is_zero(), residual};
}

PositivityScreen positivity_screen(const LayeredGraph& g,
                                   const CoverClosure& cl) {
  IntPolynomial p = hilbert_inverse(g, cl).negate_variable();
  PositivityScreen out;
  for (int d = 0; d <= p.degree(); ++d) {
    if (p.coeff(d) < 0) {
      out.pass = false;
      out.fail_degree = d;
      out.fail_coeff = p.coeff(d);
      return out;
    }
  }
  return out;
}

std::vector<mpz_class> b_coefficients(const LayeredGraph& g,
                                      const CoverClosure& cl, int upto,
                                      EliminationMode mode) {
  std::vector<mpz_class> series = expand_series(hilbert_inverse(g, cl), upto);
  IntPolynomial dual_neg = dual_hilbert(g, mode).negate_variable();
  std::vector<mpz_class> b(static_cast<size_t>(upto) + 1, mpz_class(0));
  for (int n = 0; n <= upto; ++n)
    for (int i = 0; i <= n; ++i)
      b[static_cast<size_t>(n)] +=
          series[static_cast<size_t>(i)] * dual_neg.coeff(n - i);
  return b;
}

namespace {

// Matrix of the single "delete factor at position p" map over the given
// length-k chains, rows keyed by the reduced chains.
ExactMatrix deletion_single(const std::vector<Chain>& monomials, int k,
                            int p) {
  std::map<Chain, int> row_index;
  std::vector<std::pair<int, int>> entries;
  for (size_t col = 0; col < monomials.size(); ++col) {
    Chain reduced;
    reduced.reserve(static_cast<size_t>(k) - 1);
    for (int i = 0; i < k; ++i)
      if (i != p) reduced.push_back(monomials[col][static_cast<size_t>(i)]);
    auto [it, inserted] =
        row_index.emplace(std::move(reduced), static_cast<int>(row_index.size()));
    entries.emplace_back(it->second, static_cast<int>(col));
  }
  ExactMatrix mat(static_cast<int>(row_index.size()),
                  static_cast<int>(monomials.size()));
  for (const auto& [r, c] : entries) mat.add(r, c, mpq_class(1));
  return mat;
}

int index_of(std::map<Chain, int>& table, const Chain& key) {
  auto [it, inserted] = table.emplace(key, static_cast<int>(table.size()));
  return it->second;
}

std::vector<std::vector<mpq_class>> densify(
    const std::vector<std::map<int, mpq_class>>& sparse, int dim) {
  std::vector<std::vector<mpq_class>> out;
  out.reserve(sparse.size());
  for (const auto& row : sparse) {
    std::vector<mpq_class> dense(static_cast<size_t>(dim), mpq_class(0));
    for (const auto& [c, val] : row) dense[static_cast<size_t>(c)] = val;
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace

bool distributivity_check(const LayeredGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) < 4) continue;
    std::vector<Chain> chains = enumerate_linked(g, v, 4);
    if (chains.empty()) continue;
    int n = static_cast<int>(chains.size());

    ExactMatrix d1 = deletion_single(chains, 4, 1);  // RV^2
    ExactMatrix d2 = deletion_single(chains, 4, 2);  // VRV
    ExactMatrix d3 = deletion_single(chains, 4, 3);  // V^2R

    auto stacked = [&](const ExactMatrix& a, const ExactMatrix& b) {
      ExactMatrix m = a;
      m.stack(b);
      return m;
    };

    std::vector<std::vector<mpq_class>> k1 = kernel_basis(d3);
    std::vector<std::vector<mpq_class>> k2 = kernel_basis(d2);
    std::vector<std::vector<mpq_class>> k3 = kernel_basis(d1);

    // dim(A1 cap (A2 + A3)) = dim A1 + dim(A2 + A3) - dim(A1 + A2 + A3).
    std::vector<std::vector<mpq_class>> sum23 = k2;
    sum23.insert(sum23.end(), k3.begin(), k3.end());
    std::vector<std::vector<mpq_class>> sum123 = sum23;
    sum123.insert(sum123.end(), k1.begin(), k1.end());
    int left = static_cast<int>(k1.size()) + rank_of_vectors(sum23, n) -
               rank_of_vectors(sum123, n);

    // dim((A1 cap A2) + (A1 cap A3)) via kernel bases of stacked systems.
    std::vector<std::vector<mpq_class>> k12 = kernel_basis(stacked(d3, d2));
    std::vector<std::vector<mpq_class>> k13 = kernel_basis(stacked(d3, d1));
    k12.insert(k12.end(), k13.begin(), k13.end());
    int right = rank_of_vectors(k12, n);

    if (left != right) return false;
  }
  return true;
}

SufficientConditionResult sufficient_condition(const LayeredGraph& g,
                                               const CoverClosure& cl, int v,
                                               int j, int l) {
  if (g.level(v) < 2 || j < 1 || j > g.level(v) - 1 || l < 0 ||
      l > g.level(v) - j - 2)
    throw Error(ErrorKind::Argument, "sufficient_condition index out of range");
  int k2 = l + 2, k3 = l + 3;

  // S_d(v): vertices at distance d below v, with S_0(v) = {v}.
  auto stratum = [&](int dist) {
    std::vector<int> out;
    if (dist == 0) {
      out.push_back(v);
      return out;
    }
    for (int w : g.level_vertices(g.level(v) - dist))
      if (cl.less(w, v)) out.push_back(w);
    return out;
  };

  std::map<Chain, int> col;   // length-(l+2) chains, shared by both sides
  std::map<Chain, int> tail;  // length-(l+1) tails of the left generators

  // Kernel bases of R_w^{(l+2)} over w in S_j(v), in global coordinates,
  // together with their images under deletion of the first factor.
  std::vector<std::map<int, mpq_class>> gens;
  std::vector<std::map<int, mpq_class>> gen_tails;
  for (int w : stratum(j)) {
    std::vector<Chain> adm = enumerate_admissible(g, w, k2);
    if (adm.empty()) continue;
    for (const auto& b : kernel_basis(deletion_system(g, adm, k2))) {
      std::map<int, mpq_class> gv, tv;
      for (size_t c = 0; c < adm.size(); ++c) {
        if (b[c] == 0) continue;
        gv[index_of(col, adm[c])] = b[c];
        Chain t(adm[c].begin() + 1, adm[c].end());
        tv[index_of(tail, t)] += b[c];
      }
      gens.push_back(std::move(gv));
      gen_tails.push_back(std::move(tv));
    }
  }

  // The left side is the kernel of the first-factor deletion restricted
  // to the span of the generators.
  ExactMatrix tail_map(static_cast<int>(tail.size()),
                       static_cast<int>(gens.size()));
  for (size_t i = 0; i < gen_tails.size(); ++i)
    for (const auto& [r, val] : gen_tails[i])
      tail_map.add(r, static_cast<int>(i), val);
  std::vector<std::vector<mpq_class>> combo = kernel_basis(tail_map);

  std::vector<std::map<int, mpq_class>> left_basis;
  for (const auto& gamma : combo) {
    std::map<int, mpq_class> acc;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (gamma[i] == 0) continue;
      for (const auto& [c, val] : gens[i]) acc[c] += gamma[i] * val;
    }
    left_basis.push_back(std::move(acc));
  }

  // The right side is spanned by first-factor deletions of the kernel
  // bases of R_{w'}^{(l+3)} over w' in S_{j-1}(v).
  std::vector<std::map<int, mpq_class>> right_gens;
  for (int w : stratum(j - 1)) {
    std::vector<Chain> adm = enumerate_admissible(g, w, k3);
    if (adm.empty()) continue;
    for (const auto& b : kernel_basis(deletion_system(g, adm, k3))) {
      std::map<int, mpq_class> acc;
      for (size_t c = 0; c < adm.size(); ++c) {
        if (b[c] == 0) continue;
        Chain t(adm[c].begin() + 1, adm[c].end());
        acc[index_of(col, t)] += b[c];
      }
      right_gens.push_back(std::move(acc));
    }
  }

  int dim = static_cast<int>(col.size());
  std::vector<std::vector<mpq_class>> left_dense = densify(left_basis, dim);
  std::vector<std::vector<mpq_class>> right_dense = densify(right_gens, dim);

  SufficientConditionResult out;
  out.left_dim = static_cast<int>(left_basis.size());
  out.right_dim = rank_of_vectors(right_dense, dim);
  std::vector<std::vector<mpq_class>> both = left_dense;
  both.insert(both.end(), right_dense.begin(), right_dense.end());
  out.right_in_left = rank_of_vectors(both, dim) == out.left_dim;
  out.holds = out.right_in_left && out.left_dim == out.right_dim;
  return out;
}

SufficientConditionSweep sufficient_condition_all(const LayeredGraph& g,
                                                  const CoverClosure& cl) {
  SufficientConditionSweep out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) < 2) continue;
    for (int j = 1; j <= g.level(v) - 1; ++j) {
      for (int l = 0; l <= g.level(v) - j - 2; ++l) {
        ++out.checked;
        if (!sufficient_condition(g, cl, v, j, l).holds) {
          out.all_hold = false;
          out.first_failure = {v, j, l};
          return out;
        }
      }
    }
  }
  return out;
}

KoszulReport koszul_verdict(const LayeredGraph& g, const CoverClosure& cl,
                            EliminationMode mode) {
  KoszulReport rep;
  rep.hilbert_inv = hilbert_inverse(g, cl);
  bool warn = false;
  rep.dual = dual_hilbert(g, mode, &warn);
  rep.uniform = !warn;
  rep.residual = rep.hilbert_inv - rep.dual.negate_variable();
  rep.numerically_koszul = rep.residual.is_zero();
  rep.screen = positivity_screen(g, cl);
  rep.b_coeffs = b_coefficients(g, cl, g.height(), mode);
  rep.distributive = distributivity_check(g);

  if (!rep.numerically_koszul) {
    rep.verdict = Verdict::NotNumericallyKoszul;
    return rep;
  }
  SufficientConditionSweep sweep = sufficient_condition_all(g, cl);
  rep.sufficient_evaluated = true;
  rep.sufficient_all = sweep.all_hold;
  rep.sufficient_checked = sweep.checked;
  rep.sufficient_failure = sweep.first_failure;
  if (sweep.all_hold)
    rep.verdict = Verdict::KoszulByProp61;
  else if (g.height() <= 4)
    rep.verdict = Verdict::KoszulByHeightLE4;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

}  // namespace splitalg
