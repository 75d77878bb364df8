#pragma once

#include <string>
#include <vector>

#include "cycloblocks/cyclo.hpp"

namespace cycloblocks::parts {

// Weakly decreasing sequence of positive integers; the empty partition is
// the empty list. The constructor sorts and drops zeros, so equality is
// literal list equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;  // sum of parts
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  // Lexicographic on the part lists.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // "4,2" with the empty partition rendered as "-".
  std::string str() const;
  static Partition parse(const std::string& s);

 private:
  std::vector<unsigned> parts_;
};

// All partitions of n in lexicographically decreasing order, memoized.
// Throws enumeration_limit_error beyond the configured cap.
const std::vector<Partition>& all_partitions(unsigned n);

// Hook lengths over all cells, sorted decreasing; cardinality = size.
std::vector<unsigned> hooks(const Partition& lam);

// b(lambda) = sum (i-1) * lambda_i.
unsigned b_stat(const Partition& lam);

// First-column hook encoding: beta_i = lambda_i + (length - i) for
// i = 1..length, stored strictly increasing.
class BetaSet {
 public:
  BetaSet(const Partition& lam, std::size_t length);
  static BetaSet from_entries(std::vector<unsigned> entries);
  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  Partition to_partition() const;

 private:
  BetaSet() = default;
  std::vector<unsigned> entries_;
};

// e-core via the e-abacus: within each residue class mod e the beta
// entries slide down as far as possible. Order-independent by
// construction.
Partition e_core(const Partition& lam, unsigned e);
unsigned e_weight(const Partition& lam, unsigned e);
// Standard residue convention: component r collects beta entries
// congruent to r mod e, each divided out by e.
std::vector<Partition> e_quotient(const Partition& lam, unsigned e);
// No hook length divisible by e (computed from hooks, independently of
// the abacus route).
bool is_e_core(const Partition& lam, unsigned e);

// All partitions of size(lam)+e obtained by adding one rim e-hook,
// sorted lexicographically decreasing.
std::vector<Partition> add_e_hooks(const Partition& lam, unsigned e);

// Generic degree of the unipotent character of GL_n labelled by lam:
// q^{b(lam)} * prod_{k<=n} (q^k - 1) / prod_{h in hooks} (q^h - 1).
// Throws consistency_error if the division is not exact.
cyclo::CycloFactorization generic_degree_gl(const Partition& lam);

}  // namespace cycloblocks::parts
