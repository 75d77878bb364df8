#pragma once

#include <string>
#include <vector>

#include "cycloblocks/genred.hpp"
#include "cycloblocks/partitions.hpp"

namespace cycloblocks::jordan {

// One Frobenius-orbit of eigenvalues of a semisimple element: degree d,
// multiplicity m, and an opaque tag distinguishing it from other orbits.
struct Orbit {
  unsigned d = 1;
  unsigned m = 1;
  std::string tag;
  auto operator<=>(const Orbit&) const = default;
};

// Semisimple ell'-class label s for GL_n(q) with centralizer
// prod_i GL_{m_i}(q^{d_i}). The ell'-property is asserted, not verified.
class SemisimpleLabel {
 public:
  explicit SemisimpleLabel(std::vector<Orbit> orbits, bool ell_prime = true);
  static SemisimpleLabel central(unsigned n);

  const std::vector<Orbit>& orbits() const { return orbits_; }
  unsigned ambient_rank() const;  // sum d_i * m_i
  bool ell_prime_asserted() const { return ell_prime_; }
  genred::GroupLabel centralizer() const;
  bool is_central() const;
  std::string canonical_key() const;
  bool operator==(const SemisimpleLabel&) const = default;

 private:
  std::vector<Orbit> orbits_;  // sorted by (d, m, tag); tags distinct
  bool ell_prime_;
};

// Local e-parameter of a factor GL_m(q^d) when the ambient parameter is
// e: e / gcd(e, d), which equals e_of(ell, q^d) whenever e_of(ell, q) = e
// and ell is odd. ell = 2 is unsupported here.
unsigned factor_e_parameter(unsigned e, unsigned d, unsigned long ell);

// Ennola parameter transform used for GU series: e odd -> 2e,
// e = 2 mod 4 -> e/2, 4 | e -> e.
unsigned ennola_e(unsigned e);

// Data of one centralizer factor inside an e-Jordan-cuspidal pair: the
// e_i-core carried by the unipotent part and the number of Phi_e torus
// blocks GL_1(q^{lcm(d, e)}) absorbing the rest of the rank.
struct CuspidalFactor {
  Orbit orbit;
  parts::Partition core;  // its own local_e-core, |core| + local_e * weight = m
  unsigned weight = 0;
  unsigned local_e = 1;
};

class CuspidalPair {
 public:
  CuspidalPair(SemisimpleLabel series, unsigned e,
               std::vector<CuspidalFactor> factors);

  const SemisimpleLabel& series() const { return series_; }
  unsigned e() const { return e_; }
  const std::vector<CuspidalFactor>& factors() const { return factors_; }
  unsigned ambient_rank() const { return series_.ambient_rank(); }

  // The Jordan-side Levi L_1 <= C(s): principal factors GL_{|core_i|}(q^{d_i})
  // and torus blocks GL_1(q^{lcm(d_i,e)}).
  genred::GroupLabel jordan_levi_label() const;
  // The pair's e-split Levi in the ambient GL_n(q): centralizer of the
  // central Phi_e-torus of the Jordan-side Levi.
  genred::LeviShape ambient_levi_shape() const;

  // Phi_e-multiplicity of the connected center of the ambient Levi;
  // equals the rank of the pair's defining Phi_e-torus.
  unsigned long phi_e_central_multiplicity() const;
  // Same quantity computed on the Jordan side; the Psi bijection keeps
  // the central e-torus, so the two must agree.
  unsigned long phi_e_central_multiplicity_jordan_side() const;
  unsigned long long relative_weyl_order() const;

  std::string canonical_key() const;

 private:
  SemisimpleLabel series_;
  unsigned e_;
  std::vector<CuspidalFactor> factors_;  // aligned with series orbits
};

// The ell-block label of Theorem A at label level: the series together
// with the tuple of e_i-cores.
class BlockLabel {
 public:
  BlockLabel(SemisimpleLabel series, unsigned e,
             std::vector<parts::Partition> cores);
  const SemisimpleLabel& series() const { return series_; }
  unsigned e() const { return e_; }
  const std::vector<parts::Partition>& cores() const { return cores_; }
  std::string canonical_key() const;
  bool operator==(const BlockLabel&) const = default;

 private:
  SemisimpleLabel series_;
  unsigned e_;
  std::vector<parts::Partition> cores_;
};

// All e-Jordan-cuspidal pairs of GL_n(q) below the series s, one per
// label-level conjugacy class, in a deterministic order. ell must be an
// odd prime.
std::vector<CuspidalPair> enumerate_eJC_pairs(unsigned n,
                                              const SemisimpleLabel& s,
                                              unsigned e, unsigned long ell);

// The bijection Psi between e-Jordan-cuspidal pairs of the minimal Levi
// G_1 (product of GL_{m_i d_i}(q) blocks) below s and those of GL_n(q)
// below s. Matched pairs agree in relative Weyl order and central
// Phi_e-multiplicity; any mismatch raises consistency_error.
struct PsiMatch {
  std::vector<CuspidalPair> levi_side;  // one pair per G_1 block
  CuspidalPair ambient_side;
  unsigned long long weyl_order;
  unsigned long phi_e_multiplicity;
};
std::vector<PsiMatch> psi_bijection(const SemisimpleLabel& s, unsigned e,
                                    unsigned long ell);

// Central ell-defect test for a unipotent label mu on GL_{|mu|}(q^d):
// val_ell(degree(mu) at q^d) = val_ell(|GL_{|mu|}(q^d)|) - val_ell(q^d - 1).
bool quasi_central_defect_factor(const parts::Partition& mu, unsigned d,
                                 unsigned long ell, unsigned long q);

// Conjunction of the factor test over all nonempty cores of the pair;
// torus blocks hold trivially. ell must be odd and prime to q.
bool is_quasi_central_defect(const CuspidalPair& pair, unsigned long ell,
                             unsigned long q);

}  // namespace cycloblocks::jordan
