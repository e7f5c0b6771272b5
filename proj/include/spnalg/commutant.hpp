#ifndef SPNALG_COMMUTANT_HPP
#define SPNALG_COMMUTANT_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spnalg/monomial_group.hpp"

namespace spnalg {

namespace detail {

/// a Lipschitz unit as +-(one of 1, i, j, k); axis 0..3, neg the sign
struct SignedAxis {
  int axis = 0;
  bool neg = false;
};

inline SignedAxis to_axis(const UnitCoef &u)
{
  if (!u.is_lipschitz())
    throw std::invalid_argument("commutant: entry " + u.str() +
                                " is not a Lipschitz unit");
  int q = 0; // angle as a multiple of 1/4
  if (!u.angle().is_zero())
    q = static_cast<int>(u.angle().num() << (2 - u.angle().level()));
  SignedAxis res;
  res.axis = (q % 2 == 0 ? 0 : 1) + (u.j_flag() ? 2 : 0);
  res.neg = q >= 2;
  return res;
}

inline SignedAxis axis_mul(const SignedAxis &a, const SignedAxis &b)
{
  // quaternion basis products: table[a][b] = (axis, negated)
  static constexpr int axis_table[4][4] = {{0, 1, 2, 3},
                                           {1, 0, 3, 2},
                                           {2, 3, 0, 1},
                                           {3, 2, 1, 0}};
  static constexpr bool neg_table[4][4] = {
      {false, false, false, false},
      {false, true, false, true},
      {false, true, true, false},
      {false, false, true, true},
  };
  return {axis_table[a.axis][b.axis],
          static_cast<bool>(a.neg ^ b.neg ^ neg_table[a.axis][b.axis])};
}

inline SignedAxis axis_conj(const SignedAxis &a)
{
  return {a.axis, a.axis == 0 ? a.neg : !a.neg};
}

/** Union-find over coefficients identified up to sign.  A class dies when a
 * relation forces x = -x; the solution dimension is the number of live
 * classes.
 */
class SignedDsu {
public:
  explicit SignedDsu(int n)
  : parent_(n),
    parity_(n, 0),
    dead_(n, 0)
  {
    for (int i = 0; i < n; ++i)
      parent_[i] = i;
  }

  /// (root, parity of the path to it)
  std::pair<int, int> find(int x)
  {
    if (parent_[x] == x)
      return {x, 0};
    auto [root, par] = find(parent_[x]);
    parent_[x] = root;
    parity_[x] = static_cast<std::uint8_t>(parity_[x] ^ par);
    return {root, parity_[x]};
  }

  /// impose x = (-1)^parity * y
  void unite(int x, int y, int parity)
  {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) {
      if ((px ^ py) != parity)
        dead_[rx] = 1;
      return;
    }
    parent_[rx] = ry;
    parity_[rx] = static_cast<std::uint8_t>(px ^ py ^ parity);
    dead_[ry] |= dead_[rx];
  }

  int live_classes()
  {
    int res = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i).first == i && !dead_[i])
        ++res;
    return res;
  }

private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint8_t> dead_;
};

} // namespace detail

/** Real dimension of the quaternionic commutant {X in M_n(H) : XM = MX for
 * all M in mats}.  Writing X coefficientwise over the basis (1, i, j, k),
 * each monomial M with permutation pi and column units m_c imposes
 *
 *     X_{pi(r), pi(c)} = m_r * X_{r c} * conj(m_c),
 *
 * which permutes the 4n^2 real coefficients up to sign, so the dimension is
 * the number of live sign-consistent orbits.  Every entry must be a
 * Lipschitz unit (+-1, +-i, +-j, +-k); others throw.  The empty set yields
 * the full algebra dimension 4n^2.
 */
inline int commutant_dimension(int rank,
                               const std::vector<MonomialMatrix> &mats)
{
  int n = rank;
  auto idx = [n](int r, int c, int e) { return (r * n + c) * 4 + e; };

  detail::SignedDsu dsu(4 * n * n);
  for (const auto &m : mats) {
    if (m.rank() != n)
      throw std::invalid_argument("commutant: rank mismatch");
    for (int r = 0; r < n; ++r) {
      auto mr = detail::to_axis(m.coef(r));
      for (int c = 0; c < n; ++c) {
        auto mc_conj = detail::axis_conj(detail::to_axis(m.coef(c)));
        for (int e = 0; e < 4; ++e) {
          auto image = detail::axis_mul(detail::axis_mul(mr, {e, false}),
                                        mc_conj);
          dsu.unite(idx(m.perm()[r], m.perm()[c], image.axis), idx(r, c, e),
                    image.neg ? 1 : 0);
        }
      }
    }
  }
  return dsu.live_classes();
}

inline int commutant_dimension(const MonomialGroup &g)
{ return commutant_dimension(g.rank(), g.elements()); }

/** The subgroup of elements all of whose entries are Lipschitz units; for the
 * depth-truncated circle groups this is the contained quaternionic group, so
 * its commutant bounds the full commutant from above.
 */
inline MonomialGroup lipschitz_part(const MonomialGroup &g)
{
  std::vector<MonomialMatrix> keep;
  for (const auto &m : g.elements()) {
    bool ok = true;
    for (const auto &u : m.coefs())
      if (!u.is_lipschitz()) {
        ok = false;
        break;
      }
    if (ok)
      keep.push_back(m);
  }
  return MonomialGroup::from_elements(g.rank(), std::move(keep));
}

} // namespace spnalg

#endif // SPNALG_COMMUTANT_HPP
