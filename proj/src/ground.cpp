#include "lagmat/ground.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace lagmat {

int popcount(Mask m) { return std::popcount(m); }

namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGround)
    throw domain_error("ground size must be in 1.." +
                       std::to_string(kMaxGround) + ", got " +
                       std::to_string(n));
}

void check_element(GroundIndex x, int n) {
  if (x.underlying < 1 || x.underlying > n)
    throw domain_error("index " + std::to_string(x.underlying) +
                       " out of range 1.." + std::to_string(n));
}

}  // namespace

bool is_admissible(const std::vector<GroundIndex>& elems) {
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (x == star(y)) return false;
  return true;
}

AdmissibleSet AdmissibleSet::make(int n, const std::vector<GroundIndex>& elems) {
  check_ground_size(n);
  AdmissibleSet s{n, 0, 0};
  for (const auto& x : elems) {
    check_element(x, n);
    const Mask bit = Mask{1} << (x.underlying - 1);
    if ((s.plus | s.stars) & bit) {
      if (s.contains(x)) continue;  // duplicate element, set semantics
      throw domain_error("set is not admissible: contains both " +
                         std::to_string(x.underlying) + " and " +
                         std::to_string(x.underlying) + "*");
    }
    (x.starred ? s.stars : s.plus) |= bit;
  }
  return s;
}

bool AdmissibleSet::contains(GroundIndex x) const {
  if (x.underlying < 1 || x.underlying > n) return false;
  const Mask bit = Mask{1} << (x.underlying - 1);
  return (x.starred ? stars : plus) & bit;
}

std::vector<GroundIndex> AdmissibleSet::members() const {
  std::vector<GroundIndex> out;
  for (int i = 1; i <= n; ++i) {
    const Mask bit = Mask{1} << (i - 1);
    if (plus & bit) out.push_back({i, false});
    if (stars & bit) out.push_back({i, true});
  }
  return out;
}

bool Transversal::contains(GroundIndex x) const {
  if (x.underlying < 1 || x.underlying > n) return false;
  return x.starred == (((stars >> (x.underlying - 1)) & 1) != 0);
}

AdmissibleSet Transversal::as_set() const {
  return AdmissibleSet{n, full_mask(n) & ~stars, stars};
}

std::string to_string(const AdmissibleSet& s) {
  std::string out;
  bool first = true;
  for (const auto& x : s.members()) {
    if (!first && s.n > 9) out += ',';
    first = false;
    out += std::to_string(x.underlying);
    if (x.starred) out += '*';
  }
  return out;
}

std::string to_string(const Transversal& t) { return to_string(t.as_set()); }

namespace {

std::vector<GroundIndex> tokenize_notation(const std::string& text, int n) {
  std::vector<GroundIndex> elems;
  const auto fail = [&](const std::string& why) {
    throw parse_error("bad basis notation \"" + text + "\": " + why);
  };
  std::size_t i = 0;
  bool expect_comma = false;
  while (i < text.size()) {
    if (n > 9 && expect_comma) {
      if (text[i] != ',') fail("expected ',' between indices");
      ++i;
      if (i == text.size()) fail("trailing ','");
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected an index digit");
    int value = 0;
    if (n <= 9) {
      value = text[i] - '0';
      ++i;
    } else {
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxGround) fail("index too large");
        ++i;
      }
    }
    bool starred = false;
    if (i < text.size() && text[i] == '*') {
      starred = true;
      ++i;
    }
    if (value < 1 || value > n)
      fail("index " + std::to_string(value) + " out of range 1.." +
           std::to_string(n));
    elems.push_back({value, starred});
    expect_comma = true;
  }
  return elems;
}

}  // namespace

AdmissibleSet parse_admissible_set(const std::string& text, int n) {
  check_ground_size(n);
  const auto elems = tokenize_notation(text, n);
  Mask seen = 0;
  for (const auto& x : elems) {
    const Mask bit = Mask{1} << (x.underlying - 1);
    if (seen & bit)
      throw parse_error("bad basis notation \"" + text + "\": index " +
                        std::to_string(x.underlying) + " repeated");
    seen |= bit;
  }
  return AdmissibleSet::make(n, elems);
}

Transversal parse_transversal(const std::string& text, int n) {
  const AdmissibleSet s = parse_admissible_set(text, n);
  if (s.size() != n) {
    for (int i = 1; i <= n; ++i)
      if (!((s.plus | s.stars) >> (i - 1) & 1))
        throw parse_error("bad transversal \"" + text + "\": index " +
                          std::to_string(i) + " unassigned");
  }
  return Transversal{n, s.stars};
}

bool notation_less(const Transversal& a, const Transversal& b) {
  return to_string(a) < to_string(b);
}

bool notation_less(const AdmissibleSet& a, const AdmissibleSet& b) {
  return to_string(a) < to_string(b);
}

AdmissibleOrdering AdmissibleOrdering::base(int n) {
  check_ground_size(n);
  AdmissibleOrdering w;
  w.n = n;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 1);
  return w;
}

OrderingRanks ordering_ranks(const AdmissibleOrdering& w) {
  OrderingRanks r;
  r.n = w.n;
  // Base ranks: i* at n-i, i at n+i-1; position k of w re-targets them.
  for (int k = 1; k <= w.n; ++k) {
    const int j = w.perm[k - 1];
    const bool flip = (w.flips >> (k - 1)) & 1;
    r.rank[element_code(j, flip)] = static_cast<std::int8_t>(w.n + k - 1);
    r.rank[element_code(j, !flip)] = static_cast<std::int8_t>(w.n - k);
  }
  return r;
}

GroundIndex apply(const AdmissibleOrdering& w, GroundIndex x) {
  check_element(x, w.n);
  const bool flip = (w.flips >> (x.underlying - 1)) & 1;
  return {w.perm[x.underlying - 1], x.starred != flip};
}

Transversal apply(const AdmissibleOrdering& w, const Transversal& t) {
  if (t.n != w.n) throw domain_error("apply: mismatched ground sizes");
  Transversal out{t.n, 0};
  for (int i = 1; i <= t.n; ++i) {
    const GroundIndex source{i, ((t.stars >> (i - 1)) & 1) != 0};
    const GroundIndex image = apply(w, source);
    if (image.starred) out.stars |= Mask{1} << (image.underlying - 1);
  }
  return out;
}

namespace {

// Flip vectors (b_0,...,b_{n-1}) in lexicographic order: counter bit n-1-k
// carries b_k.
Mask flips_from_counter(Mask counter, int n) {
  Mask flips = 0;
  for (int k = 0; k < n; ++k)
    if ((counter >> (n - 1 - k)) & 1) flips |= Mask{1} << k;
  return flips;
}

}  // namespace

namespace {

void check_ordering_guard(int n) {
  check_ground_size(n);
  if (n > kMaxOrderingGround)
    throw domain_error("ordering enumeration limited to n <= " +
                       std::to_string(kMaxOrderingGround));
}

}  // namespace

void for_each_ordering(int n,
                       const std::function<bool(const AdmissibleOrdering&)>& fn) {
  check_ordering_guard(n);
  AdmissibleOrdering w = AdmissibleOrdering::base(n);
  do {
    for (Mask c = 0; c < (Mask{1} << n); ++c) {
      w.flips = flips_from_counter(c, n);
      if (!fn(w)) return;
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

std::vector<AdmissibleOrdering> enumerate_orderings(int n) {
  check_ordering_guard(n);
  std::vector<AdmissibleOrdering> out;
  out.reserve(static_cast<std::size_t>(ordering_count(n)));
  for_each_ordering(n, [&](const AdmissibleOrdering& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

long long ordering_count(int n) {
  long long c = 1;
  for (int i = 1; i <= n; ++i) c *= 2LL * i;
  return c;
}

std::vector<int> sorted_ranks(const OrderingRanks& r, const AdmissibleSet& s) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(s.size()));
  for (int i = 1; i <= s.n; ++i) {
    const Mask bit = Mask{1} << (i - 1);
    if (s.plus & bit) v.push_back(r.of({i, false}));
    if (s.stars & bit) v.push_back(r.of({i, true}));
  }
  std::sort(v.begin(), v.end());
  return v;
}

GaleOrder compare_sets(const AdmissibleOrdering& w, const AdmissibleSet& a,
                       const AdmissibleSet& b) {
  if (a.n != b.n || a.n != w.n)
    throw domain_error("compare_sets: mismatched ground sizes");
  if (a.size() != b.size())
    throw domain_error("compare_sets: sets must have equal size");
  const OrderingRanks r = ordering_ranks(w);
  const auto va = sorted_ranks(r, a);
  const auto vb = sorted_ranks(r, b);
  bool le = true, ge = true;
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (va[i] > vb[i]) le = false;
    if (va[i] < vb[i]) ge = false;
  }
  if (le && ge) return GaleOrder::Equal;
  if (le) return GaleOrder::Less;
  if (ge) return GaleOrder::Greater;
  return GaleOrder::Incomparable;
}

}  // namespace lagmat
