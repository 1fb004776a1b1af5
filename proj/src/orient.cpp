#include "lagmat/orient.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubefaces.hpp"

namespace lagmat {

namespace {

void require_lagrangian(const BasisSystem& m, const char* who) {
  if (!m.is_lagrangian())
    throw domain_error(std::string(who) +
                       " requires a rank-n (Lagrangian) system");
}

// Face-local sign constraints relative to one fundamental basis.
struct LongConstraint {
  int a = 0, b = 0;  // basis indices
  bool horizontal = false;
  detail::CubeFace face;
};

struct SquareConstraint {
  std::array<int, 4> v{};  // basis indices ordered low, mid, mid, high
  detail::CubeFace face;
};

struct AxiomContext {
  std::vector<LongConstraint> longs;
  std::vector<SquareConstraint> squares;
};

AxiomContext build_axiom_context(const BasisSystem& m, const Transversal& f) {
  AxiomContext ctx;
  const auto ts = m.transversals();
  const auto masks = detail::sorted_masks_of(ts);
  for (const auto& face : detail::faces_touching(masks, m.n)) {
    const auto corners = face.corners();
    std::array<int, 4> idx{};
    int present = 0;
    for (int c = 0; c < 4; ++c) {
      idx[c] = m.index_of(Transversal{m.n, corners[c]});
      if (idx[c] >= 0) ++present;
    }
    const auto height_of = [&](int c) {
      return popcount(corners[c] ^ f.stars);
    };
    // Diagonal pairs are polytope edges when fewer than two of the other
    // corners are bases.
    const auto add_long = [&](int c0, int c1, int o0, int o1) {
      if (idx[c0] < 0 || idx[c1] < 0) return;
      if ((idx[o0] >= 0) + (idx[o1] >= 0) >= 2) return;
      ctx.longs.push_back({idx[c0], idx[c1], height_of(c0) == height_of(c1), face});
    };
    add_long(0, 3, 1, 2);
    add_long(1, 2, 0, 3);
    if (present == 4) {
      // Order corners low, mid, mid, high by height relative to f.
      std::array<int, 4> order{0, 1, 2, 3};
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return height_of(a) < height_of(b); });
      SquareConstraint sq;
      sq.face = face;
      for (int c = 0; c < 4; ++c) sq.v[c] = idx[order[c]];
      ctx.squares.push_back(sq);
    }
  }
  return ctx;
}

// -1 if no 3-vs-1 split, otherwise the position of the odd sign out.
inline int odd_one_out(int s0, int s1, int s2, int s3) {
  const int sum = s0 + s1 + s2 + s3;
  if (sum != 2 && sum != -2) return -1;
  const int minority = sum > 0 ? -1 : +1;
  if (s0 == minority) return 0;
  if (s1 == minority) return 1;
  if (s2 == minority) return 2;
  return 3;
}

void check_signs_shape(const BasisSystem& m, const RelativeSigns& rs,
                       const char* who) {
  require_lagrangian(m, who);
  if (rs.fundamental.n != m.n || !m.contains(rs.fundamental))
    throw domain_error(std::string(who) +
                       ": fundamental set is not a basis of the matroid");
  if (rs.signs.size() != m.bases.size())
    throw domain_error(std::string(who) +
                       ": sign vector does not match the basis count");
  for (const auto s : rs.signs)
    if (s != 1 && s != -1)
      throw domain_error(std::string(who) + ": signs must be +1 or -1");
}

}  // namespace

int RelativeSigns::at(const BasisSystem& m, const Transversal& t) const {
  const int i = m.index_of(t);
  return i < 0 ? 0 : signs[static_cast<std::size_t>(i)];
}

RelativeSigns make_relative_signs(
    const BasisSystem& m, const Transversal& fundamental,
    const std::vector<std::pair<Transversal, int>>& assignment) {
  RelativeSigns rs{fundamental, std::vector<std::int8_t>(m.bases.size(), 0)};
  const int fi = m.index_of(fundamental);
  if (fi < 0) throw domain_error("fundamental set is not a basis");
  rs.signs[static_cast<std::size_t>(fi)] = 1;
  for (const auto& [t, s] : assignment) {
    const int i = m.index_of(t);
    if (i < 0)
      throw domain_error("sign assigned to non-basis " + to_string(t));
    rs.signs[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(s);
  }
  for (std::size_t i = 0; i < rs.signs.size(); ++i)
    if (rs.signs[i] == 0)
      throw domain_error("no sign assigned to basis " + to_string(m.bases[i]));
  return rs;
}

std::string describe(const OrientationViolation& v) {
  std::string out = "rule " + std::to_string(static_cast<int>(v.rule));
  switch (v.rule) {
    case OrientationRule::HorizontalLongEqual:
      out += " (equal-height long edge must join equal signs)";
      break;
    case OrientationRule::VerticalLongOpposite:
      out += " (height-two long edge must join opposite signs)";
      break;
    case OrientationRule::ShortSquareExtreme:
      out += " (odd sign out must sit at extreme height in a short square)";
      break;
    case OrientationRule::FundamentalPositive:
      out += " (fundamental basis must carry +1)";
      break;
  }
  out += " on face {" + std::to_string(v.axis_i) + "," +
         std::to_string(v.axis_j) + "} at";
  for (const auto& t : v.members) out += " " + to_string(t);
  return out;
}

std::vector<OrientationViolation> validate_orientation(const BasisSystem& m,
                                                       const RelativeSigns& rs) {
  check_signs_shape(m, rs, "validate_orientation");
  std::vector<OrientationViolation> violations;
  const int fi = m.index_of(rs.fundamental);
  if (rs.signs[static_cast<std::size_t>(fi)] != 1)
    violations.push_back({OrientationRule::FundamentalPositive, 0, 0, 0,
                          {rs.fundamental}});
  const AxiomContext ctx = build_axiom_context(m, rs.fundamental);
  const auto basis_at = [&](int i) {
    return Transversal{m.n, m.bases[static_cast<std::size_t>(i)].stars};
  };
  for (const auto& c : ctx.longs) {
    const bool equal = rs.signs[c.a] == rs.signs[c.b];
    if (equal != c.horizontal)
      violations.push_back({c.horizontal ? OrientationRule::HorizontalLongEqual
                                         : OrientationRule::VerticalLongOpposite,
                            c.face.bi + 1, c.face.bj + 1, c.face.fixed_stars,
                            {basis_at(c.a), basis_at(c.b)}});
  }
  for (const auto& sq : ctx.squares) {
    const int odd = odd_one_out(rs.signs[sq.v[0]], rs.signs[sq.v[1]],
                                rs.signs[sq.v[2]], rs.signs[sq.v[3]]);
    if (odd == 1 || odd == 2)
      violations.push_back({OrientationRule::ShortSquareExtreme, sq.face.bi + 1,
                            sq.face.bj + 1, sq.face.fixed_stars,
                            {basis_at(sq.v[0]), basis_at(sq.v[1]),
                             basis_at(sq.v[2]), basis_at(sq.v[3])}});
  }
  return violations;
}

int SignTable::index_of(const Transversal& t) const {
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (bases[i].stars == t.stars && bases[i].n == t.n)
      return static_cast<int>(i);
  return -1;
}

int SignTable::sign(const Transversal& a, const Transversal& b) const {
  const int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0) return 0;
  return table[static_cast<std::size_t>(i) * bases.size() + j];
}

namespace {

SignTable extend_signs_unchecked(const BasisSystem& m, const RelativeSigns& rs) {
  const std::size_t count = m.bases.size();
  SignTable st{m.n, m.transversals(), std::vector<std::int8_t>(count * count)};
  const Mask f = rs.fundamental.stars;
  for (std::size_t g = 0; g < count; ++g) {
    const Mask gm = m.bases[g].stars;
    for (std::size_t a = 0; a < count; ++a) {
      const Mask am = m.bases[a].stars;
      const int parity = popcount((gm ^ f) & (gm ^ am)) & 1;
      st.table[g * count + a] = static_cast<std::int8_t>(
          rs.signs[a] * rs.signs[g] * (parity ? -1 : 1));
    }
  }
  return st;
}

}  // namespace

SignTable extend_signs(const BasisSystem& m, const RelativeSigns& rs) {
  const auto violations = validate_orientation(m, rs);
  if (!violations.empty())
    throw domain_error("extend_signs: relative signs are not an orientation: " +
                       describe(violations.front()));
  return extend_signs_unchecked(m, rs);
}

RelativeSigns change_fundamental(const SignTable& st, const Transversal& g) {
  const int gi = st.index_of(g);
  if (gi < 0)
    throw domain_error("change_fundamental: " + to_string(g) +
                       " is not a basis");
  const std::size_t count = st.bases.size();
  RelativeSigns rs{g, std::vector<std::int8_t>(count)};
  for (std::size_t a = 0; a < count; ++a)
    rs.signs[a] = st.table[static_cast<std::size_t>(gi) * count + a];
  return rs;
}

namespace {

void check_orientation_guard(const BasisSystem& m, const char* who) {
  require_lagrangian(m, who);
  if (m.bases.size() > kMaxOrientationBases)
    throw domain_error(std::string(who) + ": more than " +
                       std::to_string(kMaxOrientationBases) +
                       " bases exceeds the assignment scan guard");
}

RelativeSigns assignment_signs(const BasisSystem& m, std::uint32_t code) {
  // Bases are notation-sorted; the least one seeds the scan with +1 and bit
  // i-1 of the code carries the sign of basis i.
  RelativeSigns rs{Transversal{m.n, m.bases.front().stars},
                   std::vector<std::int8_t>(m.bases.size())};
  rs.signs[0] = 1;
  for (std::size_t i = 1; i < m.bases.size(); ++i)
    rs.signs[i] = (code >> (i - 1)) & 1 ? -1 : 1;
  return rs;
}

}  // namespace

std::vector<SignTable> enumerate_orientations(const BasisSystem& m) {
  check_orientation_guard(m, "enumerate_orientations");
  const std::size_t count = m.bases.size();
  const AxiomContext ctx =
      build_axiom_context(m, Transversal{m.n, m.bases.front().stars});
  const std::uint32_t total = std::uint32_t{1} << (count - 1);
  std::vector<char> valid(total, 0);
  std::vector<std::int8_t> signs(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) firstprivate(signs)
#endif
  for (long long code = 0; code < static_cast<long long>(total); ++code) {
    signs[0] = 1;
    for (std::size_t i = 1; i < count; ++i)
      signs[i] = (static_cast<std::uint32_t>(code) >> (i - 1)) & 1 ? -1 : 1;
    bool ok = true;
    for (const auto& c : ctx.longs) {
      if ((signs[c.a] == signs[c.b]) != c.horizontal) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& sq : ctx.squares) {
        const int odd = odd_one_out(signs[sq.v[0]], signs[sq.v[1]],
                                    signs[sq.v[2]], signs[sq.v[3]]);
        if (odd == 1 || odd == 2) {
          ok = false;
          break;
        }
      }
    }
    valid[static_cast<std::size_t>(code)] = ok ? 1 : 0;
  }
  std::vector<SignTable> out;
  for (std::uint32_t code = 0; code < total; ++code)
    if (valid[code]) out.push_back(extend_signs_unchecked(m, assignment_signs(m, code)));
  return out;
}

std::vector<SignTable> enumerate_orientations_serial(const BasisSystem& m) {
  check_orientation_guard(m, "enumerate_orientations");
  const std::uint32_t total = std::uint32_t{1} << (m.bases.size() - 1);
  std::vector<SignTable> out;
  for (std::uint32_t code = 0; code < total; ++code) {
    const RelativeSigns rs = assignment_signs(m, code);
    if (validate_orientation(m, rs).empty()) out.push_back(extend_signs(m, rs));
  }
  return out;
}

SignTable canonical_even_orientation(const BasisSystem& m) {
  require_lagrangian(m, "canonical_even_orientation");
  if (!is_even(m))
    throw domain_error("canonical_even_orientation: matroid is not even");
  const Transversal f{m.n, m.bases.front().stars};
  RelativeSigns rs{f, std::vector<std::int8_t>(m.bases.size())};
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    const int h = popcount(m.bases[i].stars ^ f.stars);
    rs.signs[i] = (h / 2) % 2 ? -1 : 1;
  }
  return extend_signs(m, rs);
}

RelativeSigns orientation_from_representation(const FundamentalReduction& fr,
                                              const BasisSystem& m) {
  require_lagrangian(m, "orientation_from_representation");
  RelativeSigns rs{fr.fundamental, std::vector<std::int8_t>(m.bases.size())};
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    const int s = sign_of_basis(fr, Transversal{m.n, m.bases[i].stars});
    if (s == 0)
      throw std::logic_error(
          "orientation_from_representation: vanishing minor at a basis");
    rs.signs[i] = static_cast<std::int8_t>(s);
  }
  return rs;
}

namespace {

std::optional<AdmissibleOrdering> isomorphism_search(
    const BasisSystem& m1, const BasisSystem& m2, const SignTable* s1,
    const SignTable* s2) {
  if (m1.n != m2.n)
    throw domain_error("isomorphism: mismatched ground sizes");
  require_lagrangian(m1, "isomorphism");
  require_lagrangian(m2, "isomorphism");
  if (m1.bases.size() != m2.bases.size()) return std::nullopt;
  const auto ts1 = m1.transversals();
  const auto target = detail::sorted_masks_of(m2.transversals());
  std::optional<AdmissibleOrdering> found;
  for_each_ordering(m1.n, [&](const AdmissibleOrdering& w) {
    std::vector<Mask> image;
    image.reserve(ts1.size());
    for (const auto& t : ts1) image.push_back(apply(w, t).stars);
    std::sort(image.begin(), image.end());
    if (image != target) return true;
    if (s1 && s2) {
      for (const auto& a : ts1)
        for (const auto& b : ts1)
          if (s2->sign(apply(w, a), apply(w, b)) != s1->sign(a, b)) return true;
    }
    found = w;
    return false;
  });
  return found;
}

}  // namespace

std::optional<AdmissibleOrdering> find_isomorphism(const BasisSystem& m1,
                                                   const BasisSystem& m2) {
  return isomorphism_search(m1, m2, nullptr, nullptr);
}

std::optional<AdmissibleOrdering> find_isomorphism(const BasisSystem& m1,
                                                   const SignTable& s1,
                                                   const BasisSystem& m2,
                                                   const SignTable& s2) {
  return isomorphism_search(m1, m2, &s1, &s2);
}

}  // namespace lagmat
