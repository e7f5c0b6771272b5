#ifndef SPNALG_SINGULAR_SET_HPP
#define SPNALG_SINGULAR_SET_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "spnalg/monomial_matrix.hpp"
#include "spnalg/signed_perm.hpp"
#include "spnalg/torus.hpp"

namespace spnalg {

namespace detail {

/** Generators of the fixed subgroup {t : act(s,t) = t} at coordinate level L.
 * Walking a permutation cycle c -> perm(c) propagates t[perm(c)] = +-t[c];
 * a cycle whose sign product is +1 contributes a free circle parameter
 * (generator of order 2^L), and a cycle with sign product -1 forces
 * 2t = 0 on it (generator of order 2).
 */
inline std::vector<TorusPoint> fixed_subgroup_gens(const SignedPerm &s, int L,
                                                   bool positive_cycles_only)
{
  int n = s.rank();
  std::vector<TorusPoint> gens;
  std::vector<bool> done(n, false);
  for (int start = 0; start < n; ++start) {
    if (done[start])
      continue;

    std::vector<int> cycle{start};
    std::vector<bool> negate{false};
    done[start] = true;
    bool flip = false;
    for (int c = s.perm()[start]; c != start; c = s.perm()[c]) {
      flip ^= s.sign_at(c);
      cycle.push_back(c);
      negate.push_back(flip);
      done[c] = true;
    }
    bool cycle_positive = !(flip ^ s.sign_at(start));

    auto gen = TorusPoint::zero(n);
    if (cycle_positive) {
      auto unit = DyadicAngle::make(1, L);
      for (std::size_t idx = 0; idx < cycle.size(); ++idx)
        gen.at(cycle[idx]) = negate[idx] ? -unit : unit;
    } else {
      if (positive_cycles_only)
        continue;
      for (int c : cycle)
        gen.at(c) = DyadicAngle::half(); // -1/2 = 1/2, signs immaterial
    }
    gens.push_back(gen);
  }
  return gens;
}

} // namespace detail

/** The singular data of a reflection s at depth m:
 *   fixed      F(s): subgroup of depth-m torus points with act(s,t) = t,
 *   divisible  H(s): image of F(s) at depth m + j_test under j_test doublings
 *              (the depth-m shadow of the maximal divisible subgroup),
 *   coset      K(s) = kappa0 + im(1+s): the squares of all lifts of s, with
 *              kappa0 the square of the base lift,
 *   sigma(s) = H(s) union K(s).
 */
class SingularSets {
public:
  SingularSets(const SignedPerm &s, int depth, int j_test = 2)
  : s_(s),
    depth_(depth)
  {
    if (!is_reflection(s))
      throw std::invalid_argument("SingularSets: input is not a reflection");
    if (depth < 1 || depth + j_test > 24)
      throw std::invalid_argument("SingularSets: depth out of range");
    int n = s.rank();

    fixed_ = TorusSubgroup::generated_by(
        n, detail::fixed_subgroup_gens(s, depth, false));

    // doubling j_test times sends a level-(m+j) free generator to level m and
    // kills the order-2 generators of the sign-twisted cycles
    auto deep = detail::fixed_subgroup_gens(s, depth + j_test, false);
    std::vector<TorusPoint> halved;
    for (auto g : deep) {
      for (int rep = 0; rep < j_test; ++rep)
        g = g.doubled();
      if (!g.is_zero())
        halved.push_back(g);
    }
    divisible_ = TorusSubgroup::generated_by(n, std::move(halved));

    auto base = MonomialMatrix::base_lift(s);
    kappa0_ = (base * base).torus_point();

    std::vector<TorusPoint> image_gens;
    for (int i = 0; i < n; ++i) {
      auto e = TorusPoint::zero(n);
      e.at(i) = DyadicAngle::make(1, depth);
      image_gens.push_back(e + act(s, e));
    }
    one_plus_s_image_ = TorusSubgroup::generated_by(n, std::move(image_gens));
  }

  const SignedPerm &reflection() const { return s_; }
  int depth() const { return depth_; }
  const TorusSubgroup &fixed() const { return fixed_; }
  const TorusSubgroup &divisible() const { return divisible_; }
  const TorusPoint &kappa0() const { return kappa0_; }
  const TorusSubgroup &one_plus_s_image() const { return one_plus_s_image_; }

  bool f_contains(const TorusPoint &t) const { return fixed_.contains(t); }
  bool h_contains(const TorusPoint &t) const { return divisible_.contains(t); }
  bool k_contains(const TorusPoint &t) const
  { return one_plus_s_image_.contains(t - kappa0_); }
  bool sigma_contains(const TorusPoint &t) const
  { return h_contains(t) || k_contains(t); }

  bool sigma_contains_all(const TorusSubgroup &a) const
  {
    for (const auto &t : a.elements())
      if (!sigma_contains(t))
        return false;
    return true;
  }

  std::vector<TorusPoint> k_elements() const
  {
    std::vector<TorusPoint> res;
    for (const auto &t : one_plus_s_image_.elements())
      res.push_back(kappa0_ + t);
    std::sort(res.begin(), res.end());
    return res;
  }

  std::vector<TorusPoint> sigma_elements() const
  {
    auto res = divisible_.elements();
    auto k = k_elements();
    res.insert(res.end(), k.begin(), k.end());
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
  }

private:
  SignedPerm s_;
  int depth_;
  TorusSubgroup fixed_;
  TorusSubgroup divisible_;
  TorusPoint kappa0_;
  TorusSubgroup one_plus_s_image_;
};

inline SingularSets singular_sets(const SignedPerm &s, int depth,
                                  int j_test = 2)
{ return SingularSets(s, depth, j_test); }

} // namespace spnalg

#endif // SPNALG_SINGULAR_SET_HPP
