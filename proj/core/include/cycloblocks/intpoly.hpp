#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace cycloblocks::cyclo {

// Dense polynomial in one variable q with arbitrary-precision integer
// coefficients, stored lowest degree first. The zero polynomial has an
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(long c);
  static IntPoly monomial(const mpz_class& c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class eval(const mpz_class& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

  // Exact division over the integers. Throws std::domain_error if the
  // divisor is zero, a coefficient quotient is inexact, or the remainder
  // is nonzero.
  IntPoly divide_exact(const IntPoly& divisor) const;

  // Human-readable form like "q^4 - q^2 + 1".
  std::string str() const;

 private:
  std::vector<mpz_class> coeffs_;
  void normalize();
};

}  // namespace cycloblocks::cyclo
