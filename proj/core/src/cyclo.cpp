#include "cycloblocks/cyclo.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cycloblocks/errors.hpp"

namespace cycloblocks::cyclo {

namespace {
std::mutex cyclo_mutex;
std::vector<IntPoly> cyclo_table;  // index d, entry 0 unused
}  // namespace

const IntPoly& cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: d must be positive");
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  if (d < cyclo_table.size() && !cyclo_table[d].is_zero())
    return cyclo_table[d];
  if (cyclo_table.size() <= d) cyclo_table.resize(d + 1);
  // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e, computed bottom-up so
  // the recursion never re-enters the lock.
  for (unsigned m = 1; m <= d; ++m) {
    if (!cyclo_table[m].is_zero()) continue;
    IntPoly num = IntPoly::monomial(1, m) - IntPoly::constant(1);
    for (unsigned e = 1; e < m; ++e)
      if (m % e == 0) num = num.divide_exact(cyclo_table[e]);
    cyclo_table[m] = num;
  }
  return cyclo_table[d];
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(unsigned long q, unsigned long* p, unsigned* k) {
  if (q < 2) return false;
  unsigned long base = q;
  for (unsigned long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  unsigned long r = q;
  unsigned exp = 0;
  while (r % base == 0) {
    r /= base;
    ++exp;
  }
  if (r != 1) return false;
  if (p) *p = base;
  if (k) *k = exp;
  return true;
}

unsigned e_of(unsigned long ell, unsigned long q) {
  if (!is_prime(ell)) throw std::invalid_argument("e_of: ell must be prime");
  if (q < 2 || q % ell == 0)
    throw std::invalid_argument("e_of: ell must not divide q");
  const unsigned long mod = (ell == 2) ? 4 : ell;
  unsigned long pw = q % mod;
  unsigned e = 1;
  while (pw != 1) {
    pw = (pw * q) % mod;
    ++e;
    if (e > mod)
      throw consistency_error("e_of: order search did not terminate");
  }
  return e;
}

EllParams::EllParams(unsigned long ell_, unsigned long q_) : ell(ell_), q(q_) {
  if (!is_prime_power(q)) throw std::invalid_argument("EllParams: q not a prime power");
  e = e_of(ell, q);  // validates ell
}

unsigned long val_ell(const mpz_class& n, unsigned long ell) {
  if (n == 0) throw std::invalid_argument("val_ell: zero has no valuation");
  mpz_class rest;
  mpz_class l(static_cast<unsigned long>(ell));
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), l.get_mpz_t());
}

void CycloFactorization::mul_phi(unsigned d, unsigned long mult) {
  if (d == 0) throw std::invalid_argument("mul_phi: d must be positive");
  if (mult == 0) return;
  factors[d] += mult;
}

void CycloFactorization::mul(const CycloFactorization& other) {
  q_exponent += other.q_exponent;
  for (const auto& [d, m] : other.factors) factors[d] += m;
}

void CycloFactorization::divide_exact(const CycloFactorization& other) {
  if (other.q_exponent > q_exponent)
    throw consistency_error("CycloFactorization: inexact division (q power)");
  q_exponent -= other.q_exponent;
  for (const auto& [d, m] : other.factors) {
    auto it = factors.find(d);
    if (it == factors.end() || it->second < m)
      throw consistency_error("CycloFactorization: inexact division (Phi_" +
                              std::to_string(d) + ")");
    it->second -= m;
    if (it->second == 0) factors.erase(it);
  }
}

bool CycloFactorization::divides(const CycloFactorization& other) const {
  if (q_exponent > other.q_exponent) return false;
  for (const auto& [d, m] : factors)
    if (other.multiplicity(d) < m) return false;
  return true;
}

unsigned long CycloFactorization::multiplicity(unsigned d) const {
  auto it = factors.find(d);
  return it == factors.end() ? 0 : it->second;
}

IntPoly CycloFactorization::expand() const {
  IntPoly result = IntPoly::monomial(1, q_exponent);
  for (const auto& [d, m] : factors) {
    const IntPoly& phi = cyclotomic(d);
    for (unsigned long i = 0; i < m; ++i) result = result * phi;
  }
  return result;
}

mpz_class CycloFactorization::eval(const mpz_class& q) const {
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), q.get_mpz_t(), q_exponent);
  for (const auto& [d, m] : factors) {
    mpz_class v = cyclotomic(d).eval(q);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), m);
    result *= pw;
  }
  return result;
}

std::string CycloFactorization::str() const {
  std::ostringstream os;
  bool first = true;
  if (q_exponent > 0) {
    os << "q";
    if (q_exponent > 1) os << "^" << q_exponent;
    first = false;
  }
  for (const auto& [d, m] : factors) {
    if (!first) os << ".";
    os << "Phi" << d;
    if (m > 1) os << "^" << m;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

CycloFactorization qpow_minus_one(unsigned m) {
  if (m == 0) throw std::invalid_argument("qpow_minus_one: m must be positive");
  CycloFactorization f;
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0) f.mul_phi(d);
  return f;
}

CycloFactorization qpow_plus_one(unsigned m) {
  if (m == 0) throw std::invalid_argument("qpow_plus_one: m must be positive");
  CycloFactorization f;
  for (unsigned d = 1; d <= 2 * m; ++d)
    if ((2 * m) % d == 0 && m % d != 0) f.mul_phi(d);
  return f;
}

unsigned long val_ell_at(const CycloFactorization& f, const EllParams& params) {
  mpz_class q(params.q);
  unsigned long total = 0;
  for (const auto& [d, m] : f.factors) {
    mpz_class v = cyclotomic(d).eval(q);
    total += m * val_ell(v, params.ell);
  }
  // q^{q_exponent} contributes nothing since ell does not divide q.
  return total;
}

}  // namespace cycloblocks::cyclo
