#include "lagmat/matroid.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lagmat {

BasisSystem BasisSystem::make(int n, int k, std::vector<AdmissibleSet> bases) {
  if (n < 1 || n > kMaxGround)
    throw domain_error("basis system: ground size out of range");
  if (k < 0 || k > n) throw domain_error("basis system: rank out of range");
  if (bases.empty())
    throw domain_error("basis system: the basis collection must be non-empty");
  for (const auto& b : bases) {
    if (b.n != n) throw domain_error("basis system: mismatched ground size");
    if (b.size() != k)
      throw domain_error("basis system: basis " + to_string(b) +
                         " does not have size " + std::to_string(k));
  }
  std::sort(bases.begin(), bases.end(),
            [](const AdmissibleSet& a, const AdmissibleSet& b) {
              return notation_less(a, b);
            });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return BasisSystem{n, k, std::move(bases)};
}

BasisSystem BasisSystem::lagrangian(int n,
                                    const std::vector<Transversal>& bases) {
  std::vector<AdmissibleSet> sets;
  sets.reserve(bases.size());
  for (const auto& t : bases) {
    if (t.n != n) throw domain_error("basis system: mismatched ground size");
    sets.push_back(t.as_set());
  }
  return make(n, n, std::move(sets));
}

std::vector<Transversal> BasisSystem::transversals() const {
  if (!is_lagrangian())
    throw domain_error("operation requires a rank-n (Lagrangian) system");
  std::vector<Transversal> out;
  out.reserve(bases.size());
  for (const auto& b : bases) out.push_back(Transversal{n, b.stars});
  return out;
}

bool BasisSystem::contains(const Transversal& t) const {
  return index_of(t) >= 0;
}

int BasisSystem::index_of(const Transversal& t) const {
  if (t.n != n || k != n) return -1;
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (bases[i].stars == t.stars) return static_cast<int>(i);
  return -1;
}

namespace {

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

MaximalityReport check_maximality(const BasisSystem& s) {
  MaximalityReport report{true, std::nullopt};
  for_each_ordering(s.n, [&](const AdmissibleOrdering& w) {
    const OrderingRanks r = ordering_ranks(w);
    std::vector<std::vector<int>> vecs;
    vecs.reserve(s.bases.size());
    for (const auto& b : s.bases) vecs.push_back(sorted_ranks(r, b));
    // The dominant basis, if any, is the one with the lexicographically
    // greatest rank vector read from the largest component down.
    std::size_t best = 0;
    for (std::size_t i = 1; i < vecs.size(); ++i) {
      if (std::lexicographical_compare(vecs[best].rbegin(), vecs[best].rend(),
                                       vecs[i].rbegin(), vecs[i].rend()))
        best = i;
    }
    for (const auto& v : vecs) {
      if (!dominates(vecs[best], v)) {
        report = {false, w};
        return false;
      }
    }
    return true;
  });
  return report;
}

MaximalityReport check_maximality_naive(const BasisSystem& s) {
  MaximalityReport report{true, std::nullopt};
  for_each_ordering(s.n, [&](const AdmissibleOrdering& w) {
    bool found = false;
    for (const auto& a : s.bases) {
      bool dominant = true;
      for (const auto& b : s.bases) {
        const GaleOrder c = compare_sets(w, b, a);
        if (c != GaleOrder::Less && c != GaleOrder::Equal) {
          dominant = false;
          break;
        }
      }
      if (dominant) {
        found = true;
        break;
      }
    }
    if (!found) {
      report = {false, w};
      return false;
    }
    return true;
  });
  return report;
}

int height(const Transversal& a, const Transversal& f) {
  if (a.n != f.n) throw domain_error("height: mismatched ground sizes");
  return popcount(a.stars ^ f.stars);
}

bool is_even(const BasisSystem& s) {
  if (!s.is_lagrangian())
    throw domain_error("is_even requires a rank-n (Lagrangian) system");
  const int parity = popcount(s.bases.front().stars) & 1;
  for (const auto& b : s.bases)
    if ((popcount(b.stars) & 1) != parity) return false;
  return true;
}

namespace {

// Per-ordering, per-transversal sorted rank vectors for the census scan.
// Ranks fit 4 bits for n <= kMaxCensusGround, so the descending vector packs
// into one integer whose natural order is the candidate-selection order.
struct CensusTables {
  int n = 0;
  int orderings = 0;
  std::vector<std::array<std::uint8_t, kMaxCensusGround>> asc;  // [o][t]
  std::vector<std::uint32_t> key;                               // [o][t]

  std::size_t at(int o, Mask t) const {
    return static_cast<std::size_t>(o) << n | t;
  }
};

CensusTables build_census_tables(int n) {
  CensusTables tb;
  tb.n = n;
  tb.orderings = static_cast<int>(ordering_count(n));
  const std::size_t cells = static_cast<std::size_t>(tb.orderings) << n;
  tb.asc.resize(cells);
  tb.key.resize(cells);
  int o = 0;
  for_each_ordering(n, [&](const AdmissibleOrdering& w) {
    const OrderingRanks r = ordering_ranks(w);
    for (Mask t = 0; t < (Mask{1} << n); ++t) {
      std::array<std::uint8_t, kMaxCensusGround> v{};
      for (int i = 1; i <= n; ++i)
        v[i - 1] = static_cast<std::uint8_t>(r.of({i, ((t >> (i - 1)) & 1) != 0}));
      std::sort(v.begin(), v.begin() + n);
      std::uint32_t key = 0;
      for (int p = 0; p < n; ++p) key = key << 4 | v[n - 1 - p];
      tb.asc[tb.at(o, t)] = v;
      tb.key[tb.at(o, t)] = key;
    }
    ++o;
    return true;
  });
  return tb;
}

bool collection_has_maxima(const CensusTables& tb,
                           const std::vector<Mask>& members) {
  for (int o = 0; o < tb.orderings; ++o) {
    Mask best = members[0];
    std::uint32_t best_key = tb.key[tb.at(o, best)];
    for (std::size_t i = 1; i < members.size(); ++i) {
      const std::uint32_t k = tb.key[tb.at(o, members[i])];
      if (k > best_key) {
        best_key = k;
        best = members[i];
      }
    }
    const auto& top = tb.asc[tb.at(o, best)];
    for (const Mask m : members) {
      const auto& v = tb.asc[tb.at(o, m)];
      for (int p = 0; p < tb.n; ++p)
        if (top[p] < v[p]) return false;
    }
  }
  return true;
}

std::vector<Mask> mask_members(unsigned long long mask, int n) {
  std::vector<Mask> members;
  for (Mask t = 0; t < (Mask{1} << n); ++t)
    if (mask >> t & 1) members.push_back(t);
  return members;
}

void check_census_ground(int n) {
  if (n < 1 || n > kMaxCensusGround)
    throw domain_error("census limited to n <= " +
                       std::to_string(kMaxCensusGround));
}

}  // namespace

BasisSystem collection_from_mask(int n, unsigned long long mask) {
  std::vector<Transversal> ts;
  for (Mask t = 0; t < (Mask{1} << n); ++t)
    if (mask >> t & 1) ts.push_back(Transversal{n, t});
  return BasisSystem::lagrangian(n, ts);
}

std::vector<char> lagrangian_collection_flags(int n, bool parallel) {
  check_census_ground(n);
  const CensusTables tb = build_census_tables(n);
  const long long total = 1LL << (1 << n);
  std::vector<char> flags(static_cast<std::size_t>(total), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
#endif
  for (long long mask = 1; mask < total; ++mask) {
    const auto members = mask_members(static_cast<unsigned long long>(mask), n);
    flags[static_cast<std::size_t>(mask)] =
        collection_has_maxima(tb, members) ? 1 : 0;
  }
  (void)parallel;
  return flags;
}

std::vector<BasisSystem> enumerate_lagrangian_matroids(int n) {
  const auto flags = lagrangian_collection_flags(n, true);
  std::vector<BasisSystem> out;
  for (std::size_t mask = 1; mask < flags.size(); ++mask)
    if (flags[mask]) out.push_back(collection_from_mask(n, mask));
  return out;
}

std::vector<BasisSystem> enumerate_lagrangian_matroids_serial(int n) {
  check_census_ground(n);
  const long long total = 1LL << (1 << n);
  std::vector<BasisSystem> out;
  for (long long mask = 1; mask < total; ++mask) {
    BasisSystem s =
        collection_from_mask(n, static_cast<unsigned long long>(mask));
    if (check_maximality(s).holds) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lagmat
