#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "splitalg/graph.hpp"
#include "splitalg/hilbert.hpp"
#include "splitalg/linalg.hpp"
#include "splitalg/polynomial.hpp"

namespace splitalg {

enum class Verdict {
  KoszulByProp61,       // sufficient condition holds at every index
  KoszulByHeightLE4,    // numerically Koszul and height <= 4
  NotNumericallyKoszul,
  Inconclusive,
};

const char* verdict_name(Verdict v);

// H(A,z)^{-1} == H(A^!,-z)? Returns the residual (their difference).
std::pair<bool, IntPolynomial> numerical_koszul(
    const LayeredGraph& g, const CoverClosure& cl,
    EliminationMode mode = EliminationMode::Rational);

// H(A,-z)^{-1} must have non-negative coefficients for A to be Koszul;
// returns the first offending degree and coefficient on failure.
struct PositivityScreen {
  bool pass = true;
  std::optional<int> fail_degree;
  mpz_class fail_coeff;
};
PositivityScreen positivity_screen(const LayeredGraph& g,
                                   const CoverClosure& cl);

// Coefficients of H(A,z) * H(A^!,-z) up to the given degree.
std::vector<mpz_class> b_coefficients(
    const LayeredGraph& g, const CoverClosure& cl, int upto,
    EliminationMode mode = EliminationMode::Rational);

// Dimension identity behind distributivity of the lattice generated by
// V^2R, VRV, RV^2, checked per top vertex inside the linked span.
bool distributivity_check(const LayeredGraph& g);

struct SufficientConditionResult {
  bool holds = false;
  int left_dim = 0;
  int right_dim = 0;
  bool right_in_left = false;
};

// One instance of the kernel-surjectivity condition at (v, j, l).
// Valid ranges: level(v) >= 2, 1 <= j <= level(v)-1, 0 <= l <= level(v)-j-2.
SufficientConditionResult sufficient_condition(const LayeredGraph& g,
                                               const CoverClosure& cl, int v,
                                               int j, int l);

struct SufficientConditionSweep {
  bool all_hold = true;
  int checked = 0;
  std::optional<std::tuple<int, int, int>> first_failure;  // (v, j, l)
};
SufficientConditionSweep sufficient_condition_all(const LayeredGraph& g,
                                                  const CoverClosure& cl);

struct KoszulReport {
  IntPolynomial hilbert_inv;
  IntPolynomial dual;
  IntPolynomial residual;
  std::vector<mpz_class> b_coeffs;
  PositivityScreen screen;
  bool uniform = true;
  bool numerically_koszul = false;
  bool sufficient_evaluated = false;  // sweep skipped when not numerical
  bool sufficient_all = false;
  bool distributive = false;  // evidence attached for height <= 4 verdicts
  int sufficient_checked = 0;
  std::optional<std::tuple<int, int, int>> sufficient_failure;
  Verdict verdict = Verdict::Inconclusive;
};

KoszulReport koszul_verdict(const LayeredGraph& g, const CoverClosure& cl,
                            EliminationMode mode = EliminationMode::Rational);

}  // namespace splitalg
