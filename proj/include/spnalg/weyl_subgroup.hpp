#ifndef SPNALG_WEYL_SUBGROUP_HPP
#define SPNALG_WEYL_SUBGROUP_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/group_closure.hpp"
#include "spnalg/signed_perm.hpp"
#include "spnalg/torus.hpp"

namespace spnalg {

/** A subgroup of the rank-n signed permutation group, stored as a canonical
 * sorted element list plus a generating set.  Group sizes here stay small
 * (2^n n! <= 645120 for n <= 7), so full enumeration is the working
 * representation throughout.
 */
class WeylSubgroup {
public:
  static constexpr int max_enumeration_rank = 7;

  WeylSubgroup() = default;

  static WeylSubgroup generated_by(int rank, std::vector<SignedPerm> gens,
                                   std::size_t cap = (1u << 21))
  {
    for (const auto &g : gens)
      if (g.rank() != rank)
        throw std::invalid_argument("WeylSubgroup: generator rank mismatch");
    auto elems = dimino_closure<SignedPerm, SignedPermHash>(
        SignedPerm::identity(rank), gens, cap);
    std::sort(elems.begin(), elems.end());
    WeylSubgroup res;
    res.rank_ = rank;
    res.gens_ = std::move(gens);
    res.elements_ = std::move(elems);
    return res;
  }

  /// wraps an already-closed element set; derives a small generating set
  static WeylSubgroup from_elements(int rank, std::vector<SignedPerm> elems)
  {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    WeylSubgroup res;
    res.rank_ = rank;
    res.elements_ = std::move(elems);
    res.gens_ = minimal_generators<SignedPerm, SignedPermHash>(
        SignedPerm::identity(rank), res.elements_);
    return res;
  }

  static WeylSubgroup trivial(int rank)
  { return generated_by(rank, {}); }

  /// the full rank-n group of signed permutations, order 2^n n!
  static WeylSubgroup full(int n)
  {
    if (n < 1 || n > max_enumeration_rank)
      throw std::invalid_argument("WeylSubgroup::full: rank out of range");

    std::vector<SignedPerm> elems;
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i)
      perm[i] = static_cast<std::uint8_t>(i);

    do {
      for (std::uint32_t signs = 0; signs < (1u << n); ++signs)
        elems.emplace_back(perm, signs);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(elems.begin(), elems.end());

    std::vector<SignedPerm> gens{SignedPerm::sign_flip(n, 0)};
    for (int i = 0; i + 1 < n; ++i)
      gens.push_back(SignedPerm::transposition(n, i, i + 1));

    WeylSubgroup res;
    res.rank_ = n;
    res.gens_ = std::move(gens);
    res.elements_ = std::move(elems);
    return res;
  }

  int rank() const { return rank_; }
  const std::vector<SignedPerm> &generators() const { return gens_; }
  const std::vector<SignedPerm> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const SignedPerm &w) const
  {
    return std::binary_search(elements_.begin(), elements_.end(), w);
  }

  bool operator==(const WeylSubgroup &other) const
  { return rank_ == other.rank_ && elements_ == other.elements_; }

  /// exhaustive closure check, intended for tests
  bool verify_closed() const
  {
    for (const auto &a : elements_)
      for (const auto &b : elements_)
        if (!contains(a * b))
          return false;
    return !elements_.empty();
  }

  bool is_normal_in(const WeylSubgroup &big) const
  {
    for (const auto &g : big.generators()) {
      auto gi = g.inverse();
      for (const auto &h : elements_)
        if (!contains(g * h * gi))
          return false;
    }
    return true;
  }

  bool is_abelian() const
  {
    for (const auto &a : gens_)
      for (const auto &b : gens_)
        if (!(a * b == b * a))
          return false;
    return true;
  }

  int exponent() const
  {
    int res = 1;
    for (const auto &e : elements_)
      res = std::lcm(res, e.order());
    return res;
  }

private:
  int rank_ = 0;
  std::vector<SignedPerm> gens_;
  std::vector<SignedPerm> elements_;
};

struct LabeledWeylSubgroup {
  int label = 0; // 1..5
  std::string name;
  WeylSubgroup subgroup;
};

/** The five normal subgroups of 2-power index for n >= 3: the preimages under
 * pi_projection of the subgroups of (Z/2)^2.  Labels:
 *   1: both coordinates trivial   -> (Z/2)^(n-1) . A_n
 *   2: even permutations          -> (Z/2)^n . A_n
 *   3: even sign vectors          -> (Z/2)^(n-1) . S_n
 *   4: sign parity == perm parity -> diagonal preimage
 *   5: no condition               -> the whole group
 */
inline std::vector<LabeledWeylSubgroup> index2power_normal_subgroups(int n)
{
  if (n < 3)
    throw std::invalid_argument(
        "index2power_normal_subgroups: needs rank >= 3");

  auto whole = WeylSubgroup::full(n);

  auto filtered = [&](int label) {
    std::vector<SignedPerm> elems;
    for (const auto &w : whole.elements()) {
      auto [sgn, par] = pi_projection(w);
      bool keep = false;
      switch (label) {
      case 1: keep = sgn == 0 && par == 0; break;
      case 2: keep = par == 0; break;
      case 3: keep = sgn == 0; break;
      case 4: keep = sgn == par; break;
      case 5: keep = true; break;
      }
      if (keep)
        elems.push_back(w);
    }
    return WeylSubgroup::from_elements(n, std::move(elems));
  };

  std::vector<LabeledWeylSubgroup> res;
  const char *names[] = {"(Z/2)^(n-1).A_n", "(Z/2)^n.A_n", "(Z/2)^(n-1).S_n",
                         "diagonal preimage", "full group"};
  for (int label = 1; label <= 5; ++label)
    res.push_back({label, names[label - 1], filtered(label)});
  return res;
}

/// subgroup generated by the reflections contained in H
inline WeylSubgroup reflection_closure(const WeylSubgroup &h)
{
  std::vector<SignedPerm> refl;
  for (const auto &w : h.elements())
    if (is_reflection(w))
      refl.push_back(w);
  return WeylSubgroup::generated_by(h.rank(), std::move(refl));
}

/// elements of H fixing every point of A
inline WeylSubgroup pointwise_stabilizer(const WeylSubgroup &h,
                                         const TorusSubgroup &a)
{
  if (h.rank() != a.rank())
    throw std::invalid_argument("pointwise_stabilizer: rank mismatch");
  std::vector<SignedPerm> elems;
  for (const auto &w : h.elements()) {
    bool fixes = true;
    for (const auto &t : a.elements())
      if (!(act(w, t) == t)) {
        fixes = false;
        break;
      }
    if (fixes)
      elems.push_back(w);
  }
  return WeylSubgroup::from_elements(h.rank(), std::move(elems));
}

} // namespace spnalg

#endif // SPNALG_WEYL_SUBGROUP_HPP
