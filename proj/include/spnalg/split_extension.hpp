#ifndef SPNALG_SPLIT_EXTENSION_HPP
#define SPNALG_SPLIT_EXTENSION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/group_closure.hpp"
#include "spnalg/monomial_matrix.hpp"
#include "spnalg/weyl_subgroup.hpp"

namespace spnalg {

/// non-splitness evidence: an element none of whose depth-m lifts has the
/// right order; when every lift's power is one constant torus point, the
/// obstruction is recorded (it is then independent of the lift entirely)
struct SplitObstruction {
  SignedPerm element;
  bool constant_power = false;
  TorusPoint forced_power; // meaningful when constant_power
};

struct SplitCheckResult {
  enum class Status { split, non_split, inconclusive };

  Status status = Status::inconclusive;
  std::vector<MonomialMatrix> complement; // closed subgroup, when split
  std::optional<SplitObstruction> obstruction; // when non_split

  bool is_split() const { return status == Status::split; }

  std::string status_str() const
  {
    switch (status) {
    case Status::split: return "split";
    case Status::non_split: return "non-split";
    default: return "inconclusive";
    }
  }
};

namespace detail {

/// depth-m lifts of w whose order equals the order of w
inline std::vector<MonomialMatrix> order_correct_lifts(const SignedPerm &w,
                                                       int depth)
{
  int d = w.order();
  std::vector<MonomialMatrix> res;
  for (const auto &l : lifts(w, depth)) {
    MonomialMatrix p = l;
    for (int e = 1; e < d; ++e)
      p = p * l;
    if (p.is_identity())
      res.push_back(l);
  }
  return res;
}

inline bool extend_complement(const std::vector<SignedPerm> &gens,
                              std::size_t idx, std::size_t target_order,
                              int depth,
                              std::vector<MonomialMatrix> &chosen,
                              std::vector<MonomialMatrix> &result)
{
  if (idx == gens.size()) {
    auto closure = dimino_closure<MonomialMatrix, MonomialMatrixHash>(
        MonomialMatrix::identity(static_cast<int>(gens.empty()
                                                      ? chosen.front().rank()
                                                      : gens[0].rank())),
        chosen, 4 * target_order);
    if (closure.size() != target_order)
      return false;
    // the projection must be injective: no non-identity torus diagonal
    for (const auto &m : closure)
      if (weyl_image(m).is_identity() && !m.is_identity())
        return false;
    std::sort(closure.begin(), closure.end());
    result = std::move(closure);
    return true;
  }

  for (const auto &cand : order_correct_lifts(gens[idx], depth)) {
    chosen.push_back(cand);
    // prune: the partial closure must already stay within bounds
    bool feasible = true;
    try {
      auto part = dimino_closure<MonomialMatrix, MonomialMatrixHash>(
          MonomialMatrix::identity(cand.rank()), chosen, target_order);
      for (const auto &m : part)
        if (weyl_image(m).is_identity() && !m.is_identity()) {
          feasible = false;
          break;
        }
    } catch (const ClosureCapExceeded &) {
      feasible = false;
    }
    if (feasible && extend_complement(gens, idx + 1, target_order, depth,
                                      chosen, result))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

/** Does the depth-m discrete-normalizer extension of Wsub by the torus split?
 * First scans for an order obstruction: an element w of Wsub such that no
 * depth-m lift of w powers to the identity (then no section can exist at this
 * depth).  Otherwise searches for a complement: a closed subgroup of monomial
 * matrices of size |Wsub| meeting the torus only in the identity.
 */
inline SplitCheckResult split_check(const WeylSubgroup &wsub, int depth,
                                    std::size_t bound = 16)
{
  if (wsub.order() > bound)
    throw std::invalid_argument("split_check: subgroup order exceeds bound");
  if (wsub.order() == 0)
    throw std::invalid_argument("split_check: empty subgroup");

  SplitCheckResult res;

  // obstruction scan
  for (const auto &w : wsub.elements()) {
    if (w.is_identity())
      continue;
    int d = w.order();
    std::set<TorusPoint> powers;
    bool any_identity = false;
    for (const auto &l : lifts(w, depth)) {
      MonomialMatrix p = l;
      for (int e = 1; e < d; ++e)
        p = p * l;
      auto t = p.torus_point(); // w^d = id, so p is a torus diagonal
      powers.insert(t);
      if (t.is_zero())
        any_identity = true;
    }
    if (!any_identity) {
      SplitObstruction obs;
      obs.element = w;
      obs.constant_power = powers.size() == 1;
      obs.forced_power = *powers.begin();
      res.status = SplitCheckResult::Status::non_split;
      res.obstruction = obs;
      return res;
    }
  }

  // complement search over order-correct lifts of a generating set
  if (wsub.order() == 1) {
    res.status = SplitCheckResult::Status::split;
    res.complement = {MonomialMatrix::identity(wsub.rank())};
    return res;
  }

  std::vector<MonomialMatrix> chosen, complement;
  if (detail::extend_complement(wsub.generators(), 0, wsub.order(), depth,
                                chosen, complement)) {
    res.status = SplitCheckResult::Status::split;
    res.complement = std::move(complement);
  } else {
    res.status = SplitCheckResult::Status::inconclusive;
  }
  return res;
}

} // namespace spnalg

#endif // SPNALG_SPLIT_EXTENSION_HPP
