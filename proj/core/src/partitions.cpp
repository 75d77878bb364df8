#include "cycloblocks/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cycloblocks/caps.hpp"
#include "cycloblocks/errors.hpp"

namespace cycloblocks::parts {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.rbegin(), parts_.rend());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> conj(parts_[0], 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<unsigned> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("Partition: empty part in '" + s + "'");
    unsigned long v = std::stoul(tok);
    if (v == 0) throw std::invalid_argument("Partition: zero part in '" + s + "'");
    parts.push_back(static_cast<unsigned>(v));
  }
  return Partition(std::move(parts));
}

namespace {
std::mutex part_mutex;
std::vector<std::vector<Partition>> part_table;

void extend_partitions(unsigned n) {
  // Classic descent enumeration, emitted in lex decreasing order.
  while (part_table.size() <= n) {
    unsigned m = static_cast<unsigned>(part_table.size());
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest,
                                                      unsigned maxpart) {
      if (rest == 0) {
        out.push_back(Partition(cur));
        return;
      }
      for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        rec(rest - p, p);
        cur.pop_back();
      }
    };
    rec(m, m == 0 ? 1 : m);
    part_table.push_back(std::move(out));
  }
}
}  // namespace

const std::vector<Partition>& all_partitions(unsigned n) {
  if (n > caps().partition_n)
    throw enumeration_limit_error("all_partitions: n=" + std::to_string(n) +
                                  " exceeds cap " +
                                  std::to_string(caps().partition_n));
  std::lock_guard<std::mutex> lock(part_mutex);
  extend_partitions(n);
  return part_table[n];
}

std::vector<unsigned> hooks(const Partition& lam) {
  const auto& l = lam.parts();
  const auto conj = lam.conjugate().parts();
  std::vector<unsigned> hs;
  hs.reserve(lam.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (unsigned j = 0; j < l[i]; ++j)
      hs.push_back(l[i] - (j + 1) + conj[j] - (i + 1) + 1);
  std::sort(hs.rbegin(), hs.rend());
  return hs;
}

unsigned b_stat(const Partition& lam) {
  unsigned b = 0;
  const auto& l = lam.parts();
  for (std::size_t i = 0; i < l.size(); ++i) b += static_cast<unsigned>(i) * l[i];
  return b;
}

BetaSet::BetaSet(const Partition& lam, std::size_t length) {
  if (length < lam.num_parts())
    throw std::invalid_argument("BetaSet: length below number of parts");
  const auto& l = lam.parts();
  entries_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    unsigned part = i < l.size() ? l[i] : 0;
    entries_[length - 1 - i] = part + static_cast<unsigned>(length - 1 - i);
  }
}

BetaSet BetaSet::from_entries(std::vector<unsigned> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i] == entries[i - 1])
      throw std::invalid_argument("BetaSet: duplicate entry");
  BetaSet b;
  b.entries_ = std::move(entries);
  return b;
}

Partition BetaSet::to_partition() const {
  std::vector<unsigned> parts;
  const std::size_t L = entries_.size();
  for (std::size_t i = L; i-- > 0;) {
    unsigned part = entries_[i] - static_cast<unsigned>(i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition e_core(const Partition& lam, unsigned e) {
  if (e == 0) throw std::invalid_argument("e_core: e must be positive");
  std::size_t L = lam.num_parts();
  while (L % e != 0 || L == 0) ++L;  // runner count a multiple of e
  BetaSet beta(lam, L);
  // Beads per runner slide to the bottom.
  std::vector<unsigned> count(e, 0);
  for (unsigned b : beta.entries()) ++count[b % e];
  std::vector<unsigned> entries;
  for (unsigned r = 0; r < e; ++r)
    for (unsigned j = 0; j < count[r]; ++j) entries.push_back(r + j * e);
  return BetaSet::from_entries(std::move(entries)).to_partition();
}

unsigned e_weight(const Partition& lam, unsigned e) {
  unsigned core = e_core(lam, e).size();
  return (lam.size() - core) / e;
}

std::vector<Partition> e_quotient(const Partition& lam, unsigned e) {
  if (e == 0) throw std::invalid_argument("e_quotient: e must be positive");
  std::size_t L = lam.num_parts();
  while (L % e != 0 || L == 0) ++L;
  BetaSet beta(lam, L);
  std::vector<std::vector<unsigned>> runner(e);
  for (unsigned b : beta.entries()) runner[b % e].push_back(b / e);
  std::vector<Partition> quot;
  quot.reserve(e);
  for (unsigned r = 0; r < e; ++r)
    quot.push_back(BetaSet::from_entries(std::move(runner[r])).to_partition());
  return quot;
}

bool is_e_core(const Partition& lam, unsigned e) {
  if (e == 0) throw std::invalid_argument("is_e_core: e must be positive");
  for (unsigned h : hooks(lam))
    if (h % e == 0) return false;
  return true;
}

std::vector<Partition> add_e_hooks(const Partition& lam, unsigned e) {
  if (e == 0) throw std::invalid_argument("add_e_hooks: e must be positive");
  // A beta length of num_parts + e leaves room for any new rows.
  BetaSet beta(lam, lam.num_parts() + e);
  std::set<unsigned> present(beta.entries().begin(), beta.entries().end());
  std::vector<Partition> out;
  for (unsigned b : beta.entries()) {
    if (present.count(b + e)) continue;
    std::vector<unsigned> entries;
    for (unsigned x : beta.entries()) entries.push_back(x == b ? b + e : x);
    out.push_back(BetaSet::from_entries(std::move(entries)).to_partition());
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return b < a;
  });
  return out;
}

cyclo::CycloFactorization generic_degree_gl(const Partition& lam) {
  cyclo::CycloFactorization deg;
  deg.q_exponent = b_stat(lam);
  const unsigned n = lam.size();
  for (unsigned k = 1; k <= n; ++k) deg.mul(cyclo::qpow_minus_one(k));
  cyclo::CycloFactorization den;
  for (unsigned h : hooks(lam)) den.mul(cyclo::qpow_minus_one(h));
  deg.divide_exact(den);  // consistency_error on inexact division
  return deg;
}

}  // namespace cycloblocks::parts
