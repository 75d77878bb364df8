#include "cycloblocks/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cycloblocks::cyclo {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(long c) {
  if (c == 0) return IntPoly();
  return IntPoly({mpz_class(c)});
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t deg) {
  if (c == 0) return IntPoly();
  std::vector<mpz_class> v(deg + 1, mpz_class(0));
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  static const mpz_class zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           mpz_class(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           mpz_class(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                           mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  return a.coeffs_ == b.coeffs_;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("IntPoly: division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree())
    throw std::domain_error("IntPoly: inexact division (degree)");

  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1,
                              mpz_class(0));
  const mpz_class& lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class top = rem[k + divisor.coeffs_.size() - 1];
    if (top == 0) continue;
    mpz_class c, r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0)
      throw std::domain_error("IntPoly: inexact division (coefficient)");
    quot[k] = c;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[k + j] -= c * divisor.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0)
      throw std::domain_error("IntPoly: inexact division (remainder)");
  return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
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
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace cycloblocks::cyclo
