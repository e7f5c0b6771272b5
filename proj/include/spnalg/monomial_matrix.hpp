#ifndef SPNALG_MONOMIAL_MATRIX_HPP
#define SPNALG_MONOMIAL_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/quaternion_unit.hpp"
#include "spnalg/signed_perm.hpp"
#include "spnalg/torus.hpp"

namespace spnalg {

/** An n x n monomial matrix over unit-quaternion coefficients: column c holds
 * its single nonzero entry coef(c) at row perm(c).  These matrices form the
 * discrete normalizer of the diagonal circle torus inside Sp(n): diagonal
 * matrices with circle entries are the torus itself, and conjugation by a
 * j-flagged coefficient inverts the corresponding circle coordinate.
 */
class MonomialMatrix {
public:
  MonomialMatrix() = default;

  MonomialMatrix(std::vector<std::uint8_t> perm, std::vector<UnitCoef> coefs)
  : perm_(std::move(perm)),
    coefs_(std::move(coefs))
  {
    assert(perm_.size() == coefs_.size());
    assert(valid_perm());
  }

  static MonomialMatrix identity(int n)
  {
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i)
      perm[i] = static_cast<std::uint8_t>(i);
    return {std::move(perm), std::vector<UnitCoef>(n, UnitCoef::one())};
  }

  /// diagonal matrix with the given entries
  static MonomialMatrix diagonal(std::vector<UnitCoef> entries)
  {
    int n = static_cast<int>(entries.size());
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i)
      perm[i] = static_cast<std::uint8_t>(i);
    return {std::move(perm), std::move(entries)};
  }

  /// scalar matrix u * I
  static MonomialMatrix scalar(int n, const UnitCoef &u)
  { return diagonal(std::vector<UnitCoef>(n, u)); }

  /// torus element as a diagonal matrix of circle coefficients
  static MonomialMatrix torus_diagonal(const TorusPoint &t)
  {
    std::vector<UnitCoef> entries;
    for (int i = 0; i < t.rank(); ++i)
      entries.push_back(UnitCoef::circle(t[i]));
    return diagonal(std::move(entries));
  }

  /** Base lift of a signed permutation: entry z(0) where the sign is positive
   * and j where it is negative, placed at row perm(c) of column c.
   */
  static MonomialMatrix base_lift(const SignedPerm &w)
  {
    int n = w.rank();
    std::vector<std::uint8_t> perm(w.perm());
    std::vector<UnitCoef> coefs;
    for (int c = 0; c < n; ++c)
      coefs.push_back(w.sign_at(perm[c]) ? UnitCoef::j() : UnitCoef::one());
    return {std::move(perm), std::move(coefs)};
  }

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<std::uint8_t> &perm() const { return perm_; }
  const std::vector<UnitCoef> &coefs() const { return coefs_; }

  /// entry of column c (sits at row perm(c))
  const UnitCoef &coef(int c) const { return coefs_[c]; }

  bool is_identity() const
  {
    for (int c = 0; c < rank(); ++c)
      if (perm_[c] != c || !coefs_[c].is_one())
        return false;
    return true;
  }

  bool is_diagonal() const
  {
    for (int c = 0; c < rank(); ++c)
      if (perm_[c] != c)
        return false;
    return true;
  }

  /// diagonal with circle entries only: an element of the discrete torus
  bool is_torus_diagonal() const
  {
    if (!is_diagonal())
      return false;
    for (const auto &u : coefs_)
      if (u.j_flag())
        return false;
    return true;
  }

  TorusPoint torus_point() const
  {
    if (!is_torus_diagonal())
      throw std::logic_error("MonomialMatrix: not a torus diagonal");
    std::vector<DyadicAngle> coords;
    for (const auto &u : coefs_)
      coords.push_back(u.angle());
    return TorusPoint(std::move(coords));
  }

  /** Matrix product.  Column c of b contributes entry b_c at row beta(c); a
   * then maps basis vector beta(c) through coefficient a_{beta(c)} to row
   * alpha(beta(c)).
   */
  friend MonomialMatrix operator*(const MonomialMatrix &a,
                                  const MonomialMatrix &b)
  {
    if (a.rank() != b.rank())
      throw std::invalid_argument("MonomialMatrix: rank mismatch");
    int n = a.rank();
    std::vector<std::uint8_t> perm(n);
    std::vector<UnitCoef> coefs;
    coefs.reserve(n);
    for (int c = 0; c < n; ++c) {
      int mid = b.perm_[c];
      perm[c] = a.perm_[mid];
      coefs.push_back(a.coefs_[mid] * b.coefs_[c]);
    }
    return {std::move(perm), std::move(coefs)};
  }

  MonomialMatrix inverse() const
  {
    int n = rank();
    std::vector<std::uint8_t> perm(n);
    std::vector<UnitCoef> coefs(n);
    for (int c = 0; c < n; ++c) {
      perm[perm_[c]] = static_cast<std::uint8_t>(c);
      coefs[perm_[c]] = coefs_[c].inverse();
    }
    return {std::move(perm), std::move(coefs)};
  }

  int order(int cap = 1 << 12) const
  {
    MonomialMatrix p = *this;
    int res = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++res;
      if (res > cap)
        throw std::runtime_error("MonomialMatrix::order: cap exceeded");
    }
    return res;
  }

  bool operator==(const MonomialMatrix &other) const = default;

  bool operator<(const MonomialMatrix &other) const
  {
    if (perm_ != other.perm_)
      return perm_ < other.perm_;
    for (int c = 0; c < rank(); ++c)
      if (!(coefs_[c] == other.coefs_[c]))
        return coefs_[c] < other.coefs_[c];
    return false;
  }

  std::size_t hash() const
  {
    std::size_t h = 0;
    for (int c = 0; c < rank(); ++c) {
      h = h * 0x9e3779b97f4a7c15ull + perm_[c];
      h = h * 0x9e3779b97f4a7c15ull + coefs_[c].hash();
    }
    return h;
  }

  /// entries as "row,col:coef" triples (1-based), column-major order
  std::string str() const
  {
    std::ostringstream out;
    for (int c = 0; c < rank(); ++c) {
      if (c > 0)
        out << " ";
      out << (perm_[c] + 1) << "," << (c + 1) << ":" << coefs_[c].str();
    }
    return out.str();
  }

  static MonomialMatrix parse(const std::string &text)
  {
    std::istringstream in(text);
    std::string item;
    std::vector<int> col_of;
    std::vector<int> row_of;
    std::vector<UnitCoef> coef_of;
    while (in >> item) {
      auto comma = item.find(',');
      auto colon = item.find(':');
      if (comma == std::string::npos || colon == std::string::npos ||
          comma > colon)
        throw std::invalid_argument("MonomialMatrix: bad entry '" + item +
                                    "'");
      int row = std::stoi(item.substr(0, comma));
      int col = std::stoi(item.substr(comma + 1, colon - comma - 1));
      row_of.push_back(row - 1);
      col_of.push_back(col - 1);
      coef_of.push_back(UnitCoef::parse(item.substr(colon + 1)));
    }
    int n = static_cast<int>(row_of.size());
    std::vector<std::uint8_t> perm(n, 255);
    std::vector<UnitCoef> coefs(n);
    std::uint32_t used_rows = 0;
    for (int e = 0; e < n; ++e) {
      int row = row_of[e], col = col_of[e];
      if (row < 0 || row >= n || col < 0 || col >= n || perm[col] != 255 ||
          (used_rows & (1u << row)))
        throw std::invalid_argument("MonomialMatrix: bad entry positions");
      perm[col] = static_cast<std::uint8_t>(row);
      coefs[col] = coef_of[e];
      used_rows |= 1u << row;
    }
    return {std::move(perm), std::move(coefs)};
  }

private:
  bool valid_perm() const
  {
    std::uint32_t seen = 0;
    for (auto i : perm_) {
      if (i >= perm_.size() || (seen & (1u << i)))
        return false;
      seen |= 1u << i;
    }
    return true;
  }

  std::vector<std::uint8_t> perm_;
  std::vector<UnitCoef> coefs_;
};

struct MonomialMatrixHash {
  std::size_t operator()(const MonomialMatrix &m) const { return m.hash(); }
};

/** The signed permutation induced on the torus by conjugation: the permutation
 * part of the matrix, with coordinate i inverted exactly when the coefficient
 * landing in row i carries j.
 */
inline SignedPerm weyl_image(const MonomialMatrix &m)
{
  int n = m.rank();
  std::uint32_t signs = 0;
  for (int c = 0; c < n; ++c)
    if (m.coef(c).j_flag())
      signs |= 1u << m.perm()[c];
  return SignedPerm(m.perm(), signs);
}

/** All lifts of w at depth m: the base lift times every torus diagonal with
 * coordinates of level <= m, in canonical torus order; 2^{mn} matrices.
 */
inline std::vector<MonomialMatrix> lifts(const SignedPerm &w, int depth)
{
  int n = w.rank();
  if (depth * n > 24)
    throw std::invalid_argument("lifts: 2^{mn} too large");
  auto base = MonomialMatrix::base_lift(w);

  std::vector<MonomialMatrix> res;
  std::vector<DyadicAngle> coords(n);
  std::uint64_t total = std::uint64_t{1} << (depth * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < n; ++i) {
      coords[i] = DyadicAngle::make(
          static_cast<std::int64_t>(rest & ((1u << depth) - 1)), depth);
      rest >>= depth;
    }
    res.push_back(MonomialMatrix::torus_diagonal(TorusPoint(coords)) * base);
  }
  std::sort(res.begin(), res.end());
  return res;
}

} // namespace spnalg

#endif // SPNALG_MONOMIAL_MATRIX_HPP
