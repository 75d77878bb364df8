#include "cycloblocks/genred.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cycloblocks/caps.hpp"
#include "cycloblocks/errors.hpp"

namespace cycloblocks::genred {

int Factor::epsilon() const {
  if (kind == Kind::GL) return 1;
  return (rank + 1) / 2 % 2 == 0 ? 1 : -1;
}

GroupLabel GroupLabel::gl(unsigned rank, unsigned degree) {
  GroupLabel g;
  g.times(Factor{Kind::GL, rank, degree});
  return g;
}

GroupLabel GroupLabel::gu(unsigned rank, unsigned degree) {
  GroupLabel g;
  g.times(Factor{Kind::GU, rank, degree});
  return g;
}

GroupLabel& GroupLabel::times(const Factor& f) {
  if (f.rank == 0 || f.degree == 0)
    throw std::invalid_argument("GroupLabel: rank and degree must be positive");
  factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), f), f);
  return *this;
}

GroupLabel& GroupLabel::times(const GroupLabel& other) {
  for (const Factor& f : other.factors_) times(f);
  return *this;
}

unsigned GroupLabel::total_rank() const {
  unsigned r = 0;
  for (const Factor& f : factors_) r += f.rank * f.degree;
  return r;
}

bool GroupLabel::all_rank_one() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.rank == 1; });
}

int GroupLabel::epsilon() const {
  int e = 1;
  for (const Factor& f : factors_) e *= f.epsilon();
  return e;
}

std::string GroupLabel::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i) os << " x ";
    const Factor& f = factors_[i];
    os << (f.kind == Kind::GL ? "GL" : "GU") << f.rank << "(q";
    if (f.degree > 1) os << "^" << f.degree;
    os << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

cyclo::CycloFactorization order_poly(const GroupLabel& g) {
  cyclo::CycloFactorization ord;
  for (const Factor& f : g.factors()) {
    ord.q_exponent +=
        static_cast<unsigned long>(f.degree) * f.rank * (f.rank - 1) / 2;
    for (unsigned i = 1; i <= f.rank; ++i) {
      if (f.kind == Kind::GL || i % 2 == 0)
        ord.mul(cyclo::qpow_minus_one(f.degree * i));
      else
        ord.mul(cyclo::qpow_plus_one(f.degree * i));
    }
  }
  return ord;
}

GroupLabel LeviShape::label() const {
  GroupLabel g;
  if (principal > 0) g.times(Factor{Kind::GL, principal, 1});
  for (unsigned b : blocks) g.times(Factor{Kind::GL, b, e});
  return g;
}

std::string LeviShape::str() const { return label().str(); }

LeviShape LeviShape::canonical() const {
  LeviShape s = *this;
  std::sort(s.blocks.rbegin(), s.blocks.rend());
  if (s.e == 1) {
    // Over the same field the principal slot is just another factor;
    // canonical form puts the largest part there.
    std::vector<unsigned> all = s.blocks;
    if (s.principal > 0) all.push_back(s.principal);
    std::sort(all.rbegin(), all.rend());
    if (all.empty()) {
      s.principal = 0;
      s.blocks.clear();
    } else {
      s.principal = all.front();
      s.blocks.assign(all.begin() + 1, all.end());
    }
  }
  return s;
}

std::vector<LeviShape> enumerate_e_split_levis(unsigned N, unsigned e) {
  if (e == 0)
    throw std::invalid_argument("enumerate_e_split_levis: e must be positive");
  if (N > caps().levi_rank)
    throw enumeration_limit_error("enumerate_e_split_levis: N=" +
                                  std::to_string(N) + " exceeds cap " +
                                  std::to_string(caps().levi_rank));
  std::vector<LeviShape> out;
  // a + e * sum(b_i) = N over multisets {b_i}; blocks enumerated as
  // partitions of the torus budget.
  for (unsigned t = 0; t * e <= N; ++t) {
    unsigned a = N - t * e;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest,
                                                      unsigned maxpart) {
      if (rest == 0) {
        LeviShape s{N, e, a, cur};
        if (e == 1) {
          // keep only canonical representatives: principal >= every block
          if (!cur.empty() && cur.front() > a) return;
        }
        out.push_back(s.canonical());
        return;
      }
      for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        rec(rest - p, p);
        cur.pop_back();
      }
    };
    rec(t, t == 0 ? 1 : t);
  }
  std::sort(out.begin(), out.end(), [](const LeviShape& x, const LeviShape& y) {
    if (x.principal != y.principal) return x.principal > y.principal;
    return x.blocks > y.blocks;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned long sylow_e_torus_valuation(const GroupLabel& g, unsigned e) {
  return order_poly(g).multiplicity(e);
}

unsigned long long relative_weyl_order(unsigned /*core_size*/, unsigned weight,
                                       unsigned e) {
  if (e == 0)
    throw std::invalid_argument("relative_weyl_order: e must be positive");
  if (weight > 20)
    throw enumeration_limit_error("relative_weyl_order: weight too large");
  unsigned long long r = 1;
  for (unsigned i = 0; i < weight; ++i) r *= e;
  for (unsigned i = 2; i <= weight; ++i) r *= i;
  return r;
}

GroupLabel centralizer_of_sylow_e_torus(unsigned N, unsigned e) {
  if (e != 1 && e != 2)
    throw std::invalid_argument(
        "centralizer_of_sylow_e_torus: only e in {1,2} is supported");
  if (N == 0) return GroupLabel();
  unsigned m = static_cast<unsigned>(
      sylow_e_torus_valuation(GroupLabel::gl(N), e));
  GroupLabel g;
  for (unsigned i = 0; i < m; ++i) g.times(Factor{Kind::GL, 1, e});
  for (unsigned i = 0; i < N - e * m; ++i) g.times(Factor{Kind::GL, 1, 1});
  if (!g.all_rank_one())
    throw consistency_error(
        "centralizer_of_sylow_e_torus: result is not a torus");
  return g;
}

}  // namespace cycloblocks::genred
