#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitalg/polynomial.hpp"

using splitalg::IntPolynomial;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("trailing zeros are trimmed and degree is exact") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(IntPolynomial::zero().degree() == -1);
  CHECK(poly({5}).coeff(0) == 5);
  CHECK(poly({5}).coeff(3) == 0);
  CHECK(poly({5}).coeff(-1) == 0);
}

TEST_CASE("arithmetic") {
  IntPolynomial a = poly({1, 1});         // 1 + z
  IntPolynomial b = poly({1, -1});        // 1 - z
  CHECK(a * b == poly({1, 0, -1}));       // 1 - z^2
  CHECK(a + b == poly({2}));
  CHECK(a - a == IntPolynomial::zero());
  CHECK(a * a == poly({1, 2, 1}));
  CHECK(poly({1, 2, 1}) - poly({0, 2}) == poly({1, 0, 1}));
}

TEST_CASE("negate_variable flips odd coefficients") {
  CHECK(poly({1, -10, 8, -1, -1}).negate_variable() == poly({1, 10, 8, 1, -1}));
  CHECK(poly({3}).negate_variable() == poly({3}));
  // Involution.
  IntPolynomial p = poly({2, 3, -5, 7});
  CHECK(p.negate_variable().negate_variable() == p);
}

TEST_CASE("exact division") {
  CHECK(poly({1, 0, -1}).exact_divide(poly({1, -1})) == poly({1, 1}));
  CHECK(poly({0, 0, 6}).exact_divide(poly({0, 2})) == poly({0, 3}));
  CHECK_THROWS_AS(poly({1, 1, 1}).exact_divide(poly({1, -1})),
                  std::runtime_error);
  CHECK_THROWS_AS(poly({1}).exact_divide(IntPolynomial::zero()),
                  std::invalid_argument);
}

TEST_CASE("series inverse") {
  std::vector<mpz_class> geo = poly({1, -1}).series_inverse(5);
  for (const auto& c : geo) CHECK(c == 1);

  std::vector<mpz_class> pow2 = poly({1, -2}).series_inverse(3);
  CHECK(pow2[0] == 1);
  CHECK(pow2[1] == 2);
  CHECK(pow2[2] == 4);
  CHECK(pow2[3] == 8);

  CHECK_THROWS_AS(poly({2, 1}).series_inverse(3), std::runtime_error);

  // p * series(1/p) = 1 + O(z^{order+1}).
  IntPolynomial p = poly({1, -10, 8, -1, -1});
  std::vector<mpz_class> inv = p.series_inverse(8);
  for (int n = 1; n <= 8; ++n) {
    mpz_class acc(0);
    for (int k = 0; k <= n; ++k)
      acc += p.coeff(k) * inv[static_cast<size_t>(n - k)];
    CHECK(acc == 0);
  }
}

TEST_CASE("rendering") {
  CHECK(poly({1, -10, 8, -1, -1}).to_string() == "1 - 10z + 8z^2 - z^3 - z^4");
  CHECK(IntPolynomial::zero().to_string() == "0");
  CHECK(poly({0, 1}).to_string() == "z");
  CHECK(poly({0, -1}).to_string() == "-z");
  CHECK(poly({-2, 0, 3}).to_string() == "-2 + 3z^2");
  CHECK(poly({1, 1}).to_string() == "1 + z");
}
