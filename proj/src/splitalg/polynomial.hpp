#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace splitalg {

// Dense univariate polynomial in z with arbitrary-precision integer
// coefficients. Trailing zero coefficients are always trimmed, so
// degree() is exact; the zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({mpz_class(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int deg) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  void set_coeff(int deg, mpz_class value);

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  bool operator==(const IntPolynomial& other) const = default;

  // p(-z): flips the sign of odd-degree coefficients.
  IntPolynomial negate_variable() const;

  // Exact polynomial division; throws if the remainder is nonzero.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;

  // First `order`+1 coefficients of the power series 1/p.
  // Requires p(0) = 1.
  std::vector<mpz_class> series_inverse(int order) const;

  // Ascending-degree signed rendering, e.g. "1 - 10z + 8z^2 - z^3 - z^4".
  std::string to_string() const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace splitalg
