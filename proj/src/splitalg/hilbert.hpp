#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitalg/graph.hpp"
#include "splitalg/polynomial.hpp"

namespace splitalg {

// Signed chain counts s_{a,b} over all descending chains v_1 > ... > v_l
// with |v_1| = a, |v_l| = b and every v_i strictly above the minimum.
class ChainSumTable {
public:
  explicit ChainSumTable(int height)
      : height_(height),
        table_(static_cast<size_t>(height + 1) * static_cast<size_t>(height + 1),
               mpz_class(0)) {}

  int height() const { return height_; }
  const mpz_class& at(int a, int b) const {
    return table_[static_cast<size_t>(a) * static_cast<size_t>(height_ + 1) +
                  static_cast<size_t>(b)];
  }
  mpz_class& at(int a, int b) {
    return table_[static_cast<size_t>(a) * static_cast<size_t>(height_ + 1) +
                  static_cast<size_t>(b)];
  }

private:
  int height_;
  std::vector<mpz_class> table_;
};

// Chain-count DP over the full order relation (all comparable pairs).
ChainSumTable chain_sums(const LayeredGraph& g, const CoverClosure& cl);

// H(A(Gamma),z)^{-1}: constant term 1, coefficient of z^i (i >= 1) is
// the sum of s_{a,b} over a >= i >= a-b+1.
IntPolynomial hilbert_inverse(const LayeredGraph& g, const CoverClosure& cl);

// The same polynomial through the alternative chain-sum form
// (1 - z + sum over chains allowed to end at *) / (1 - z); the division
// must be exact.
IntPolynomial grw_inverse(const LayeredGraph& g, const CoverClosure& cl);

// First order+1 coefficients of 1/p; requires p(0) = 1. Sets
// *negative_at to the first degree with a negative coefficient, if any.
std::vector<mpz_class> expand_series(const IntPolynomial& p, int order,
                                     std::optional<int>* negative_at = nullptr);

// Closed forms for a good subdivision of a 2-manifold: the pair
// (H(A,z)^{-1}, H(A^!,z)) in terms of g, h, f.
std::pair<IntPolynomial, IntPolynomial> surface_closed_forms(int g_count,
                                                             int h_count,
                                                             int f_count);

struct EulerMuReport {
  int height = 0;
  std::optional<int> chi;  // present only for cell-complex graphs
  mpz_class mu;            // mu(*, M)
  mpz_class top_coeff;     // coefficient of z^height in H(A,z)^{-1}
  bool mu_equals_top = false;
  bool mu_equals_chi_minus_one = false;  // meaningful only when chi is set
};

// Requires a unique maximal vertex; chi, when supplied, comes from the
// cell metadata of the builder.
EulerMuReport euler_mu_report(const LayeredGraph& g, const CoverClosure& cl,
                              std::optional<int> chi = std::nullopt);

}  // namespace splitalg
