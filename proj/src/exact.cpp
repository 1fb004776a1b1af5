#include "lagmat/exact.hpp"

#include <cctype>
#include <utility>

namespace lagmat {

std::string scalar_to_string(const Rat& x) { return x.str(); }

std::string scalar_to_string(const GF2& x) { return x.v ? "1" : "0"; }

Rat parse_rational(const std::string& token) {
  // Accepted forms: [-]digits and [-]digits/[-]digits.
  const auto bad = [&] {
    throw parse_error("bad rational token \"" + token + "\"");
  };
  const auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) {
    if (!is_int(token)) bad();
    return Rat(boost::multiprecision::cpp_int(token));
  }
  const std::string num = token.substr(0, slash);
  const std::string den = token.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) bad();
  const boost::multiprecision::cpp_int d{den};
  if (d == 0) throw parse_error("bad rational token \"" + token +
                                "\": zero denominator");
  return Rat(boost::multiprecision::cpp_int(num), d);
}

GF2 parse_gf2(const std::string& token) {
  if (token == "0") return GF2{0};
  if (token == "1") return GF2{1};
  throw parse_error("bad GF(2) token \"" + token + "\": expected 0 or 1");
}

namespace {

template <class F>
int find_pivot(const Matrix<F>& m, int col, int from_row) {
  for (int r = from_row; r < m.rows(); ++r)
    if (!(m.at(r, col) == F{})) return r;
  return -1;
}

template <class F>
void swap_rows(Matrix<F>& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

}  // namespace

template <class F>
F det(Matrix<F> m) {
  if (m.rows() != m.cols())
    throw domain_error("det: matrix must be square");
  const int n = m.rows();
  F result{1};
  for (int k = 0; k < n; ++k) {
    const int p = find_pivot(m, k, k);
    if (p < 0) return F{};
    if (p != k) {
      swap_rows(m, p, k);
      result = -result;
    }
    const F pivot = m.at(k, k);
    result = result * pivot;
    for (int r = k + 1; r < n; ++r) {
      if (m.at(r, k) == F{}) continue;
      const F f = m.at(r, k) / pivot;
      for (int c = k; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
    }
  }
  return result;
}

template <class F>
int rank(Matrix<F> m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    const int p = find_pivot(m, c, r);
    if (p < 0) continue;
    swap_rows(m, p, r);
    const F pivot = m.at(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == F{}) continue;
      const F f = m.at(i, c) / pivot;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

template <class F>
Matrix<F> normalize_right_block(const Matrix<F>& left, const Matrix<F>& right) {
  if (left.rows() != left.cols() || right.rows() != right.cols() ||
      left.rows() != right.rows())
    throw domain_error("normalize_right_block: blocks must be square, same size");
  const int n = left.rows();
  // Gauss-Jordan on [right | left]; right becomes the identity.
  Matrix<F> r = right;
  Matrix<F> l = left;
  for (int k = 0; k < n; ++k) {
    const int p = find_pivot(r, k, k);
    if (p < 0) throw domain_error("normalize_right_block: right block singular");
    swap_rows(r, p, k);
    swap_rows(l, p, k);
    const F pivot = r.at(k, k);
    for (int c = 0; c < n; ++c) {
      r.at(k, c) = r.at(k, c) / pivot;
      l.at(k, c) = l.at(k, c) / pivot;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || r.at(i, k) == F{}) continue;
      const F f = r.at(i, k);
      for (int c = 0; c < n; ++c) {
        r.at(i, c) -= f * r.at(k, c);
        l.at(i, c) -= f * l.at(k, c);
      }
    }
  }
  return l;
}

template Rat det(Matrix<Rat>);
template GF2 det(Matrix<GF2>);
template int rank(Matrix<Rat>);
template int rank(Matrix<GF2>);
template Matrix<Rat> normalize_right_block(const Matrix<Rat>&,
                                           const Matrix<Rat>&);
template Matrix<GF2> normalize_right_block(const Matrix<GF2>&,
                                           const Matrix<GF2>&);

}  // namespace lagmat
