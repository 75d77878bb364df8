#pragma once

#include <string>
#include <vector>

#include "cycloblocks/cyclo.hpp"

namespace cycloblocks::genred {

enum class Kind { GL, GU };

// One factor GL_n(q^d) or GU_n(q^d) of a generic group label.
struct Factor {
  Kind kind;
  unsigned rank;    // n >= 1
  unsigned degree;  // extension degree d >= 1

  // e_L sign: +1 for GL, (-1)^{F-rank deficit} = (-1)^{ceil(n/2)} for GU_n.
  int epsilon() const;
  auto operator<=>(const Factor&) const = default;
};

// Formal product of GL/GU factors over extensions of one base q. Labels
// are generic in q; a concrete q enters only at evaluation time.
class GroupLabel {
 public:
  GroupLabel() = default;  // the trivial group
  static GroupLabel gl(unsigned rank, unsigned degree = 1);
  static GroupLabel gu(unsigned rank, unsigned degree = 1);

  GroupLabel& times(const Factor& f);
  GroupLabel& times(const GroupLabel& other);

  const std::vector<Factor>& factors() const { return factors_; }
  // sum of n_i * d_i, the rank of an ambient GL it can embed in
  unsigned total_rank() const;
  bool all_rank_one() const;
  int epsilon() const;
  std::string str() const;  // e.g. "GL2(q) x GL1(q^3)^2"

  bool operator==(const GroupLabel&) const = default;

 private:
  std::vector<Factor> factors_;  // kept sorted (canonical multiset)
};

// Generic order: for GL_n(q^d), q^{d n(n-1)/2} prod_i (q^{di} - 1); for
// GU_n(q^d), q^{d n(n-1)/2} prod_i (q^{di} - (-1)^i), with every binomial
// refactored into cyclotomic polynomials. Multiplicative over factors.
cyclo::CycloFactorization order_poly(const GroupLabel& g);

// e-split Levi subgroup of GL_N(q) up to conjugacy:
// GL_a(q) x prod GL_{b_i}(q^e) with a + e * sum b_i = N. For e = 1 the
// principal factor and the blocks live over the same field; the canonical
// representative puts the largest part in the principal slot.
struct LeviShape {
  unsigned ambient_rank = 0;
  unsigned e = 1;
  unsigned principal = 0;            // a
  std::vector<unsigned> blocks;      // b_i, sorted decreasing

  GroupLabel label() const;
  std::string str() const;
  LeviShape canonical() const;
  bool operator==(const LeviShape&) const = default;
};

// All e-split Levi shapes of GL_N(q), one per conjugacy class, in a
// deterministic order. Throws enumeration_limit_error beyond the cap.
std::vector<LeviShape> enumerate_e_split_levis(unsigned N, unsigned e);

// Multiplicity of Phi_e in the generic order of g.
unsigned long sylow_e_torus_valuation(const GroupLabel& g, unsigned e);

// |G(e,1,w)| = e^w * w!, the relative Weyl group order of an e-cuspidal
// pair of weight w in type A. core_size is carried for interface
// symmetry and does not enter the formula.
unsigned long long relative_weyl_order(unsigned core_size, unsigned weight,
                                       unsigned e);

// Centralizer label of a Sylow e-torus of GL_N(q), e in {1,2}; returns a
// label with all factors of rank one (a torus). Throws
// std::invalid_argument for e outside {1,2}.
GroupLabel centralizer_of_sylow_e_torus(unsigned N, unsigned e);

}  // namespace cycloblocks::genred
