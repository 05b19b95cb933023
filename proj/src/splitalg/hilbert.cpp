#include "splitalg/hilbert.hpp"

#include "splitalg/error.hpp"

namespace splitalg {

namespace {

// f_b(v) = signed count of chains starting at v and ending at level b,
// summed with (-1)^length. Recurrence: a chain is either {v} alone or v
// followed by a chain from some w < v.
std::vector<mpz_class> signed_chain_counts(const LayeredGraph& g,
                                           const CoverClosure& cl,
                                           int target_level) {
  std::vector<mpz_class> f(static_cast<size_t>(g.vertex_count()), mpz_class(0));
  for (int lev = target_level; lev <= g.height(); ++lev) {
    for (int v : g.level_vertices(lev)) {
      mpz_class acc = (lev == target_level) ? mpz_class(-1) : mpz_class(0);
      const Bitset& below = cl.reach(v);
      for (int w = 0; w < g.vertex_count(); ++w)
        if (g.level(w) >= target_level && g.level(w) < lev &&
            below.test(static_cast<size_t>(w)))
          acc -= f[static_cast<size_t>(w)];
      f[static_cast<size_t>(v)] = acc;
    }
  }
  return f;
}

}  // namespace

ChainSumTable chain_sums(const LayeredGraph& g, const CoverClosure& cl) {
  ChainSumTable t(g.height());
  for (int b = 1; b <= g.height(); ++b) {
    std::vector<mpz_class> f = signed_chain_counts(g, cl, b);
    for (int a = b; a <= g.height(); ++a) {
      mpz_class acc(0);
      for (int v : g.level_vertices(a)) acc += f[static_cast<size_t>(v)];
      t.at(a, b) = acc;
    }
  }
  return t;
}

IntPolynomial hilbert_inverse(const LayeredGraph& g, const CoverClosure& cl) {
  ChainSumTable t = chain_sums(g, cl);
  std::vector<mpz_class> coeffs(static_cast<size_t>(g.height()) + 1,
                                mpz_class(0));
  coeffs[0] = 1;
  for (int i = 1; i <= g.height(); ++i)
    for (int a = i; a <= g.height(); ++a)
      for (int b = 1; b <= a; ++b)
        if (i >= a - b + 1) coeffs[static_cast<size_t>(i)] += t.at(a, b);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial grw_inverse(const LayeredGraph& g, const CoverClosure& cl) {
  // Chains here may end at * itself (level 0).
  int n = g.height();
  std::vector<mpz_class> numer(static_cast<size_t>(n) + 2, mpz_class(0));
  numer[0] = 1;
  numer[1] = -1;
  for (int b = 0; b <= n; ++b) {
    std::vector<mpz_class> f = signed_chain_counts(g, cl, b);
    for (int a = b; a <= n; ++a) {
      mpz_class s(0);
      for (int v : g.level_vertices(a)) s += f[static_cast<size_t>(v)];
      if (s == 0) continue;
      numer[static_cast<size_t>(a - b + 1)] += s;  // z^{a-b+1}
      numer[static_cast<size_t>(a + 1)] -= s;      // -z^{a+1}
    }
  }
  IntPolynomial numerator{std::vector<mpz_class>(numer)};
  IntPolynomial denominator{{mpz_class(1), mpz_class(-1)}};  // 1 - z
  try {
    return numerator.exact_divide(denominator);
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::Internal, "InexactDivision in grw_inverse");
  }
}

std::vector<mpz_class> expand_series(const IntPolynomial& p, int order,
                                     std::optional<int>* negative_at) {
  if (p.coeff(0) != 1)
    throw Error(ErrorKind::Argument, "NonUnitConstant: series needs p(0) = 1");
  std::vector<mpz_class> out = p.series_inverse(order);
  if (negative_at) {
    *negative_at = std::nullopt;
    for (size_t i = 0; i < out.size(); ++i)
      if (out[i] < 0) {
        *negative_at = static_cast<int>(i);
        break;
      }
  }
  return out;
}

std::pair<IntPolynomial, IntPolynomial> surface_closed_forms(int g_count,
                                                             int h_count,
                                                             int f_count) {
  if (g_count <= 0 || h_count <= 0 || f_count <= 0)
    throw Error(ErrorKind::Argument, "counts must be positive");
  mpz_class u = g_count + f_count;
  mpz_class h = h_count;
  IntPolynomial inverse{{mpz_class(1), -(1 + u + h), 3 * h - 1, -(h + 1),
                         u - h - 1}};
  // Degree 3 of the dual is h+1 in general: the face-constraint nullspace
  // has dimension h-f+1 for any closed orientable surface, which exceeds
  // g-1 by the first Betti number when chi != 2.
  IntPolynomial dual{{mpz_class(1), 1 + u + h, 3 * h - 1, h + 1, mpz_class(1)}};
  return {inverse, dual};
}

EulerMuReport euler_mu_report(const LayeredGraph& g, const CoverClosure& cl,
                              std::optional<int> chi) {
  std::optional<int> top = g.unique_top();
  if (!top || g.level(*top) != g.height())
    throw Error(ErrorKind::Invalid, "NoUniqueTop");
  EulerMuReport rep;
  rep.height = g.height();
  rep.chi = chi;
  rep.mu = mobius(g, cl, *top, g.min_vertex());
  rep.top_coeff = hilbert_inverse(g, cl).coeff(g.height());
  rep.mu_equals_top = rep.mu == rep.top_coeff;
  if (chi) rep.mu_equals_chi_minus_one = rep.mu == mpz_class(*chi - 1);
  return rep;
}

}  // namespace splitalg
