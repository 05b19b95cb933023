#include "splitalg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace splitalg {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int deg) const {
  static const mpz_class kZero(0);
  if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(deg)];
}

void IntPolynomial::set_coeff(int deg, mpz_class value) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  if (deg >= static_cast<int>(coeffs_.size()))
    coeffs_.resize(static_cast<size_t>(deg) + 1, mpz_class(0));
  coeffs_[static_cast<size_t>(deg)] = std::move(value);
  trim();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()),
                             mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()),
                             mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return zero();
  std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1,
                             mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negate_variable() const {
  std::vector<mpz_class> out = coeffs_;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return zero();
  std::vector<mpz_class> rem = coeffs_;
  int dd = divisor.degree();
  int qd = degree() - dd;
  if (qd < 0) throw std::runtime_error("inexact polynomial division");
  std::vector<mpz_class> quot(static_cast<size_t>(qd) + 1, mpz_class(0));
  const mpz_class& lead = divisor.coeffs_.back();
  for (int i = qd; i >= 0; --i) {
    mpz_class top = rem[static_cast<size_t>(i + dd)];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::runtime_error("inexact polynomial division");
    quot[static_cast<size_t>(i)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::runtime_error("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

std::vector<mpz_class> IntPolynomial::series_inverse(int order) const {
  if (coeff(0) != 1)
    throw std::runtime_error("series inverse requires constant term 1");
  std::vector<mpz_class> out(static_cast<size_t>(order) + 1, mpz_class(0));
  out[0] = 1;
  for (int n = 1; n <= order; ++n) {
    mpz_class acc(0);
    int top = std::min(n, degree());
    for (int k = 1; k <= top; ++k)
      acc += coeffs_[static_cast<size_t>(k)] * out[static_cast<size_t>(n - k)];
    out[static_cast<size_t>(n)] = -acc;
  }
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace splitalg
