#pragma once

#include <map>
#include <string>

#include "cycloblocks/intpoly.hpp"

namespace cycloblocks::cyclo {

// d-th cyclotomic polynomial Phi_d, computed by iterated exact division
// of q^d - 1 by the Phi_e for proper divisors e of d. Memoized and safe
// for concurrent first access.
const IntPoly& cyclotomic(unsigned d);

// Multiplicative order of q modulo ell for odd ell, modulo 4 for ell = 2.
// Throws std::invalid_argument if ell divides q or ell is not prime.
unsigned e_of(unsigned long ell, unsigned long q);

bool is_prime(unsigned long n);
// If q = p^k for a prime p, returns true and fills p and k when requested.
bool is_prime_power(unsigned long q, unsigned long* p = nullptr,
                    unsigned* k = nullptr);

// ell-adic valuation of a nonzero integer.
unsigned long val_ell(const mpz_class& n, unsigned long ell);

struct EllParams {
  unsigned long ell;  // prime, not dividing q
  unsigned long q;    // prime power
  unsigned e;         // e_ell(q)
  EllParams(unsigned long ell_, unsigned long q_);
};

// Formal product q^{q_exponent} * prod_d Phi_d(q)^{factors[d]}.
class CycloFactorization {
 public:
  unsigned long q_exponent = 0;
  std::map<unsigned, unsigned long> factors;  // d -> multiplicity > 0

  void mul_phi(unsigned d, unsigned long mult = 1);
  void mul(const CycloFactorization& other);
  // Componentwise subtraction; throws consistency_error if any
  // multiplicity would go negative (the division was not exact).
  void divide_exact(const CycloFactorization& other);
  bool divides(const CycloFactorization& other) const;
  unsigned long multiplicity(unsigned d) const;

  IntPoly expand() const;
  mpz_class eval(const mpz_class& q) const;
  std::string str() const;

  bool operator==(const CycloFactorization& other) const = default;
};

// q^m - 1 and q^m + 1 refactored into cyclotomic polynomials:
// q^m - 1 = prod_{d | m} Phi_d,  q^m + 1 = prod_{d | 2m, d ∤ m} Phi_d.
CycloFactorization qpow_minus_one(unsigned m);
CycloFactorization qpow_plus_one(unsigned m);

// ell-adic valuation of f evaluated at params.q.
unsigned long val_ell_at(const CycloFactorization& f, const EllParams& params);

}  // namespace cycloblocks::cyclo
