#include "cycloblocks/jordan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cycloblocks/errors.hpp"

namespace cycloblocks::jordan {

SemisimpleLabel::SemisimpleLabel(std::vector<Orbit> orbits, bool ell_prime)
    : orbits_(std::move(orbits)), ell_prime_(ell_prime) {
  std::sort(orbits_.begin(), orbits_.end());
  std::set<std::string> tags;
  for (const Orbit& o : orbits_) {
    if (o.d == 0 || o.m == 0)
      throw std::invalid_argument("SemisimpleLabel: d and m must be positive");
    if (!tags.insert(o.tag).second)
      throw std::invalid_argument("SemisimpleLabel: duplicate tag '" + o.tag +
                                  "'");
  }
  if (orbits_.empty())
    throw std::invalid_argument("SemisimpleLabel: at least one orbit");
}

SemisimpleLabel SemisimpleLabel::central(unsigned n) {
  return SemisimpleLabel({Orbit{1, n, "1"}});
}

unsigned SemisimpleLabel::ambient_rank() const {
  unsigned r = 0;
  for (const Orbit& o : orbits_) r += o.d * o.m;
  return r;
}

genred::GroupLabel SemisimpleLabel::centralizer() const {
  genred::GroupLabel g;
  for (const Orbit& o : orbits_)
    g.times(genred::Factor{genred::Kind::GL, o.m, o.d});
  return g;
}

bool SemisimpleLabel::is_central() const {
  return orbits_.size() == 1 && orbits_[0].d == 1;
}

std::string SemisimpleLabel::canonical_key() const {
  std::ostringstream os;
  for (const Orbit& o : orbits_)
    os << o.d << "." << o.m << "." << o.tag << ";";
  return os.str();
}

unsigned factor_e_parameter(unsigned e, unsigned d, unsigned long ell) {
  if (e == 0 || d == 0)
    throw std::invalid_argument("factor_e_parameter: e, d must be positive");
  if (ell == 2)
    throw std::invalid_argument(
        "factor_e_parameter: ell = 2 is unsupported (mod-4 order does not "
        "localize factorwise)");
  if (!cyclo::is_prime(ell))
    throw std::invalid_argument("factor_e_parameter: ell must be prime");
  return e / std::gcd(e, d);
}

unsigned ennola_e(unsigned e) {
  if (e == 0) throw std::invalid_argument("ennola_e: e must be positive");
  if (e % 2 == 1) return 2 * e;
  if (e % 4 == 2) return e / 2;
  return e;
}

CuspidalPair::CuspidalPair(SemisimpleLabel series, unsigned e,
                           std::vector<CuspidalFactor> factors)
    : series_(std::move(series)), e_(e), factors_(std::move(factors)) {
  if (factors_.size() != series_.orbits().size())
    throw std::invalid_argument("CuspidalPair: one factor per orbit");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const CuspidalFactor& f = factors_[i];
    const Orbit& o = series_.orbits()[i];
    if (f.orbit != o)
      throw std::invalid_argument("CuspidalPair: factor/orbit mismatch");
    if (f.local_e == 0 || e_ % 1 != 0)
      throw std::invalid_argument("CuspidalPair: bad local parameter");
    if (f.core.size() + f.local_e * f.weight != o.m)
      throw std::invalid_argument(
          "CuspidalPair: |core| + e_i * weight must equal m");
    // J2 at label level, cross-checked through the abacus route.
    if (!parts::is_e_core(f.core, f.local_e) ||
        parts::e_core(f.core, f.local_e) != f.core)
      throw std::invalid_argument("CuspidalPair: core is not its own e_i-core");
  }
}

genred::GroupLabel CuspidalPair::jordan_levi_label() const {
  genred::GroupLabel g;
  for (const CuspidalFactor& f : factors_) {
    if (f.core.size() > 0)
      g.times(genred::Factor{genred::Kind::GL, f.core.size(), f.orbit.d});
    unsigned lcm = std::lcm(f.orbit.d, e_);
    for (unsigned j = 0; j < f.weight; ++j)
      g.times(genred::Factor{genred::Kind::GL, 1, lcm});
  }
  return g;
}

genred::LeviShape CuspidalPair::ambient_levi_shape() const {
  // L = C_G(Z(L_1)_e): the principal parts centralize the whole of their
  // underlying space (their centers carry no Phi_e-part since a_i > 0
  // forces e ∤ d_i), each torus block GL_1(q^{lcm(d,e)}) contributes a
  // block GL_{d/gcd(d,e)}(q^e).
  genred::LeviShape s;
  s.ambient_rank = ambient_rank();
  s.e = e_;
  for (const CuspidalFactor& f : factors_) {
    s.principal += f.core.size() * f.orbit.d;
    unsigned block_rank = f.orbit.d / std::gcd(f.orbit.d, e_);
    for (unsigned j = 0; j < f.weight; ++j) s.blocks.push_back(block_rank);
  }
  return s.canonical();
}

unsigned long CuspidalPair::phi_e_central_multiplicity() const {
  genred::LeviShape shape = ambient_levi_shape();
  genred::GroupLabel center;
  if (shape.principal > 0)
    center.times(genred::Factor{genred::Kind::GL, 1, 1});
  for (unsigned b : shape.blocks) {
    (void)b;
    center.times(genred::Factor{genred::Kind::GL, 1, shape.e});
  }
  return genred::sylow_e_torus_valuation(center, e_);
}

unsigned long CuspidalPair::phi_e_central_multiplicity_jordan_side() const {
  genred::GroupLabel center;
  for (const CuspidalFactor& f : factors_) {
    if (f.core.size() > 0)
      center.times(genred::Factor{genred::Kind::GL, 1, f.orbit.d});
    unsigned lcm = std::lcm(f.orbit.d, e_);
    for (unsigned j = 0; j < f.weight; ++j)
      center.times(genred::Factor{genred::Kind::GL, 1, lcm});
  }
  return genred::sylow_e_torus_valuation(center, e_);
}

unsigned long long CuspidalPair::relative_weyl_order() const {
  unsigned long long w = 1;
  for (const CuspidalFactor& f : factors_)
    w *= genred::relative_weyl_order(f.core.size(), f.weight, f.local_e);
  return w;
}

std::string CuspidalPair::canonical_key() const {
  std::ostringstream os;
  os << "e=" << e_ << "|s=" << series_.canonical_key() << "|";
  for (const CuspidalFactor& f : factors_)
    os << f.orbit.tag << ":" << f.core.str() << ":w" << f.weight << ";";
  return os.str();
}

BlockLabel::BlockLabel(SemisimpleLabel series, unsigned e,
                       std::vector<parts::Partition> cores)
    : series_(std::move(series)), e_(e), cores_(std::move(cores)) {
  if (cores_.size() != series_.orbits().size())
    throw std::invalid_argument("BlockLabel: one core per orbit");
}

std::string BlockLabel::canonical_key() const {
  std::ostringstream os;
  os << "e=" << e_ << "|s=" << series_.canonical_key() << "|";
  for (std::size_t i = 0; i < cores_.size(); ++i)
    os << series_.orbits()[i].tag << ":" << cores_[i].str() << ";";
  return os.str();
}

std::vector<CuspidalPair> enumerate_eJC_pairs(unsigned n,
                                              const SemisimpleLabel& s,
                                              unsigned e, unsigned long ell) {
  if (s.ambient_rank() != n)
    throw std::invalid_argument("enumerate_eJC_pairs: rank mismatch");
  if (e == 0)
    throw std::invalid_argument("enumerate_eJC_pairs: e must be positive");
  // validates ell odd prime
  (void)factor_e_parameter(e, 1, ell);

  // Per orbit: candidate (core, weight) with |core| + e_i * weight = m,
  // the core filtered through the hook route (is_e_core).
  std::vector<std::vector<CuspidalFactor>> choices;
  for (const Orbit& o : s.orbits()) {
    unsigned ei = factor_e_parameter(e, o.d, ell);
    std::vector<CuspidalFactor> cand;
    for (unsigned w = 0; w * ei <= o.m; ++w) {
      unsigned t = o.m - w * ei;
      for (const parts::Partition& mu : parts::all_partitions(t))
        if (parts::is_e_core(mu, ei))
          cand.push_back(CuspidalFactor{o, mu, w, ei});
    }
    choices.push_back(std::move(cand));
  }

  std::vector<CuspidalPair> out;
  std::vector<CuspidalFactor> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      out.emplace_back(s, e, cur);
      return;
    }
    for (const CuspidalFactor& f : choices[i]) {
      cur.push_back(f);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<PsiMatch> psi_bijection(const SemisimpleLabel& s, unsigned e,
                                    unsigned long ell) {
  const unsigned n = s.ambient_rank();
  std::vector<CuspidalPair> ambient = enumerate_eJC_pairs(n, s, e, ell);

  // G_1 = prod_i GL_{m_i d_i}(q); its pairs below s factor as one pair
  // per block below the corresponding single-orbit series.
  std::vector<std::vector<CuspidalPair>> per_block;
  for (const Orbit& o : s.orbits()) {
    SemisimpleLabel sub({o});
    per_block.push_back(enumerate_eJC_pairs(o.d * o.m, sub, e, ell));
  }
  std::vector<std::vector<CuspidalPair>> levi_side;
  std::vector<CuspidalPair> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_block.size()) {
      levi_side.push_back(cur);
      return;
    }
    for (const CuspidalPair& p : per_block[i]) {
      cur.push_back(p);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);

  if (levi_side.size() != ambient.size())
    throw consistency_error("psi_bijection: cardinality mismatch (" +
                            std::to_string(levi_side.size()) + " vs " +
                            std::to_string(ambient.size()) + ")");

  // Match on the per-orbit (tag, core, weight) data.
  auto tuple_key = [](const std::vector<CuspidalPair>& tup) {
    std::map<std::string, std::string> parts;
    for (const CuspidalPair& p : tup)
      for (const CuspidalFactor& f : p.factors())
        parts[f.orbit.tag] = f.core.str() + ":w" + std::to_string(f.weight);
    std::ostringstream os;
    for (const auto& [tag, v] : parts) os << tag << "=" << v << "|";
    return os.str();
  };
  auto pair_key = [&](const CuspidalPair& p) {
    return tuple_key(std::vector<CuspidalPair>{p});
  };

  std::map<std::string, const CuspidalPair*> ambient_by_key;
  for (const CuspidalPair& p : ambient) ambient_by_key[pair_key(p)] = &p;

  std::vector<PsiMatch> out;
  for (const std::vector<CuspidalPair>& tup : levi_side) {
    auto it = ambient_by_key.find(tuple_key(tup));
    if (it == ambient_by_key.end())
      throw consistency_error("psi_bijection: unmatched Levi-side pair");
    const CuspidalPair& amb = *it->second;

    unsigned long long w_levi = 1;
    unsigned long phi_levi = 0;
    for (const CuspidalPair& p : tup) {
      w_levi *= p.relative_weyl_order();
      phi_levi += p.phi_e_central_multiplicity();
    }
    if (w_levi != amb.relative_weyl_order())
      throw consistency_error("psi_bijection: relative Weyl order mismatch");
    if (phi_levi != amb.phi_e_central_multiplicity() ||
        phi_levi != amb.phi_e_central_multiplicity_jordan_side())
      throw consistency_error(
          "psi_bijection: central Phi_e-multiplicity mismatch");
    out.push_back(PsiMatch{tup, amb, w_levi, phi_levi});
    ambient_by_key.erase(it);
  }
  if (!ambient_by_key.empty())
    throw consistency_error("psi_bijection: unmatched ambient pair");
  return out;
}

bool quasi_central_defect_factor(const parts::Partition& mu, unsigned d,
                                 unsigned long ell, unsigned long q) {
  if (ell == 2 || !cyclo::is_prime(ell))
    throw std::invalid_argument("quasi_central_defect_factor: ell odd prime");
  mpz_class qd;
  mpz_class qz(q);
  mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), d);
  if (mpz_divisible_ui_p(qd.get_mpz_t(), ell))
    throw std::invalid_argument("quasi_central_defect_factor: ell divides q");
  if (mu.empty()) return true;

  mpz_class deg = parts::generic_degree_gl(mu).eval(qd);
  mpz_class ord =
      genred::order_poly(genred::GroupLabel::gl(mu.size())).eval(qd);
  unsigned long lhs = cyclo::val_ell(deg, ell);
  unsigned long rhs = cyclo::val_ell(ord, ell) - cyclo::val_ell(qd - 1, ell);
  return lhs == rhs;
}

bool is_quasi_central_defect(const CuspidalPair& pair, unsigned long ell,
                             unsigned long q) {
  for (const CuspidalFactor& f : pair.factors()) {
    if (f.core.empty()) continue;
    if (!quasi_central_defect_factor(f.core, f.orbit.d, ell, q)) return false;
  }
  return true;
}

}  // namespace cycloblocks::jordan
