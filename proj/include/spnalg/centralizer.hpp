#ifndef SPNALG_CENTRALIZER_HPP
#define SPNALG_CENTRALIZER_HPP

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spnalg/singular_set.hpp"
#include "spnalg/split_extension.hpp"
#include "spnalg/weyl_subgroup.hpp"

namespace spnalg {

/// elements of W fixing A pointwise (the Weyl group of the centralizer of A)
inline WeylSubgroup weyl_of_centralizer(const WeylSubgroup &w,
                                        const TorusSubgroup &a)
{ return pointwise_stabilizer(w, a); }

/** Subgroup generated by the reflections s in the pointwise stabilizer whose
 * singular set contains every element of A (the Weyl group of the identity
 * component of the centralizer).  Membership is checked element-by-element:
 * sigma(s) is a union of a subgroup and a coset, not a subgroup.
 */
inline WeylSubgroup weyl_of_identity_component(const WeylSubgroup &w,
                                               const TorusSubgroup &a,
                                               int depth)
{
  auto stab = weyl_of_centralizer(w, a);
  std::vector<SignedPerm> gens;
  for (const auto &s : stab.elements())
    if (is_reflection(s) && SingularSets(s, depth).sigma_contains_all(a))
      gens.push_back(s);
  return WeylSubgroup::generated_by(w.rank(), std::move(gens));
}

/// stabilizer data for one subgroup A: the two Weyl groups and, per reflection
/// of the stabilizer, whether its singular set contains all of A
struct CentralizerReport {
  TorusSubgroup a;
  WeylSubgroup weyl_full;     // pointwise stabilizer of A in the ambient group
  WeylSubgroup weyl_identity; // reflection-generated core
  std::vector<std::pair<SignedPerm, bool>> reflection_inventory;
};

inline CentralizerReport centralizer_report(const WeylSubgroup &w,
                                            const TorusSubgroup &a, int depth)
{
  CentralizerReport rep;
  rep.a = a;
  rep.weyl_full = weyl_of_centralizer(w, a);
  rep.weyl_identity = weyl_of_identity_component(w, a, depth);
  for (const auto &s : rep.weyl_full.elements())
    if (is_reflection(s))
      rep.reflection_inventory.emplace_back(
          s, SingularSets(s, depth).sigma_contains_all(a));
  return rep;
}

/** The rank-2m two-torsion subgroup with generators supported on coordinate
 * pairs (1,2), (3,4), ...: gen i has value 1/2 at coordinates 2i-1 and 2i.
 * For odd ambient rank the last coordinate stays free.
 */
inline TorusSubgroup block_two_torsion(int n)
{
  int m = n / 2;
  std::vector<TorusPoint> gens;
  for (int i = 0; i < m; ++i) {
    auto t = TorusPoint::zero(n);
    t.at(2 * i) = DyadicAngle::half();
    t.at(2 * i + 1) = DyadicAngle::half();
    gens.push_back(t);
  }
  return TorusSubgroup::generated_by(n, std::move(gens));
}

struct PipelineStep {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  long long runtime_ms = 0;
};

struct PipelineReport {
  int n = 0;
  int depth = 0;
  std::vector<PipelineStep> steps;

  bool all_pass() const
  {
    for (const auto &s : steps)
      if (!s.pass)
        return false;
    return true;
  }
};

/** The connectedness verification chain: (a) five-subgroup census with
 * reflection filtering, (b) block two-torsion subgroup, (c) its pointwise
 * stabilizer inside the even-sign subgroup, (d) the two reflection families
 * of the stabilizer, (e) the reflection-generated core, (f) non-splitness of
 * the rank-2 block extension.
 */
inline PipelineReport connectedness_pipeline(int n, int depth)
{
  if (n < 3)
    throw std::invalid_argument("connectedness_pipeline: needs rank >= 3");

  PipelineReport rep;
  rep.n = n;
  rep.depth = depth;
  int m = n / 2;

  auto last = std::chrono::steady_clock::now();
  auto step = [&rep, &last](const std::string &id, const std::string &desc,
                            const std::string &expected,
                            const std::string &computed) {
    auto now = std::chrono::steady_clock::now();
    long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now - last)
            .count();
    last = now;
    rep.steps.push_back(
        {id, desc, expected, computed, expected == computed, ms});
  };

  // (a) five normal subgroups; reflection closure keeps exactly labels 3, 5
  auto subs = index2power_normal_subgroups(n);
  {
    std::size_t w_order = WeylSubgroup::full(n).order();
    std::ostringstream exp, got;
    exp << "orders " << w_order / 4 << " " << w_order / 2 << " "
        << w_order / 2 << " " << w_order / 2 << " " << w_order
        << "; reflection-closed 3 5";
    got << "orders";
    for (const auto &s : subs)
      got << " " << s.subgroup.order();
    got << "; reflection-closed";
    for (const auto &s : subs)
      if (reflection_closure(s.subgroup) == s.subgroup)
        got << " " << s.label;
    step("five-subgroup-census",
         "orders of the five normal subgroups of 2-power index and which are "
         "generated by their own reflections",
         exp.str(), got.str());
  }

  // (b) block two-torsion subgroup of rank m
  auto v = block_two_torsion(n);
  step("block-subgroup", "order of the block two-torsion subgroup",
       std::to_string(std::size_t{1} << m), std::to_string(v.order()));

  // (c) pointwise stabilizer inside the even-sign subgroup (label 3)
  const auto &w0 = subs[2].subgroup;
  auto stab = weyl_of_centralizer(w0, v);
  step("stabilizer-order", "order of the pointwise stabilizer",
       std::to_string(std::size_t{1} << (n - 1 + m)),
       std::to_string(stab.order()));

  // (d) reflections of the stabilizer: plain and sign-twisted block swaps
  {
    int plain = 0, twisted = 0, other = 0;
    for (const auto &s : stab.elements()) {
      if (!is_reflection(s))
        continue;
      bool block_swap = false;
      for (int i = 0; i < m; ++i)
        if (s.perm()[2 * i] == 2 * i + 1) {
          block_swap = true;
          break;
        }
      if (!block_swap)
        ++other;
      else if (s.signs() == 0)
        ++plain;
      else
        ++twisted;
    }
    std::ostringstream exp, got;
    exp << m << " plain + " << m << " twisted + 0 other";
    got << plain << " plain + " << twisted << " twisted + " << other
        << " other";
    step("reflection-families", "reflections of the stabilizer by family",
         exp.str(), got.str());
  }

  // (e) reflection-generated core: elementary abelian of order 4^m
  auto core = weyl_of_identity_component(w0, v, depth);
  {
    std::ostringstream exp, got;
    exp << (std::size_t{1} << (2 * m)) << " abelian exponent 2";
    got << core.order() << (core.is_abelian() ? " abelian" : " nonabelian")
        << " exponent " << core.exponent();
    step("identity-core", "reflection-generated core of the stabilizer",
         exp.str(), got.str());
  }

  // (f) the rank-2 block extension does not split: every lift of the double
  // sign flip squares to the torus point (1/2, 1/2)
  {
    auto tau = SignedPerm::transposition(2, 0, 1);
    auto tau_tw = SignedPerm::transposition(2, 0, 1, true);
    auto msub = WeylSubgroup::generated_by(2, {tau, tau_tw});
    auto verdict = split_check(msub, depth);

    std::ostringstream got;
    got << verdict.status_str();
    if (verdict.obstruction) {
      const auto &obs = *verdict.obstruction;
      got << "; lifts of " << obs.element.str()
          << (obs.constant_power ? " all power to " : " never power to 0; eg ")
          << obs.forced_power.str();
    }
    step("block-extension", "splitting of the rank-2 block extension",
         "non-split; lifts of ()|-- all power to (1/2, 1/2)", got.str());
  }

  return rep;
}

} // namespace spnalg

#endif // SPNALG_CENTRALIZER_HPP
