#ifndef SPNALG_MONOMIAL_GROUP_HPP
#define SPNALG_MONOMIAL_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spnalg/group_closure.hpp"
#include "spnalg/group_spec.hpp"
#include "spnalg/monomial_matrix.hpp"

namespace spnalg {

/** A finite group of monomial matrices of a fixed rank, stored as the full
 * sorted element list.  Everything here is a 2-group, so the sizes stay
 * manageable; construction throws beyond the element cap.
 */
class MonomialGroup {
public:
  static constexpr std::size_t default_cap = 1u << 20;

  static MonomialGroup generated_by(int rank, std::vector<MonomialMatrix> gens,
                                    std::size_t cap = default_cap)
  {
    for (const auto &g : gens)
      if (g.rank() != rank)
        throw std::invalid_argument("MonomialGroup: generator rank mismatch");
    auto elems = dimino_closure<MonomialMatrix, MonomialMatrixHash>(
        MonomialMatrix::identity(rank), gens, cap);
    std::sort(elems.begin(), elems.end());

    MonomialGroup res;
    res.rank_ = rank;
    res.gens_ = std::move(gens);
    res.elements_ = std::move(elems);
    return res;
  }

  /// wraps an already-closed element list (sorted internally)
  static MonomialGroup from_elements(int rank,
                                     std::vector<MonomialMatrix> elems)
  {
    for (const auto &e : elems)
      if (e.rank() != rank)
        throw std::invalid_argument("MonomialGroup: element rank mismatch");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    MonomialGroup res;
    res.rank_ = rank;
    res.elements_ = std::move(elems);
    if (!res.contains(MonomialMatrix::identity(rank)))
      throw std::invalid_argument("MonomialGroup: missing identity");
    return res;
  }

  static MonomialGroup trivial(int rank)
  { return generated_by(rank, {}); }

  int rank() const { return rank_; }
  const std::vector<MonomialMatrix> &generators() const { return gens_; }
  const std::vector<MonomialMatrix> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const MonomialMatrix &m) const
  {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

  bool operator==(const MonomialGroup &other) const
  { return rank_ == other.rank_ && elements_ == other.elements_; }

  bool verify_closed() const
  {
    for (const auto &a : elements_)
      for (const auto &b : elements_)
        if (!contains(a * b))
          return false;
    return true;
  }

  bool is_normal_in(const MonomialGroup &big) const
  {
    for (const auto &g : big.elements()) {
      auto gi = g.inverse();
      for (const auto &h : elements_)
        if (!contains(g * h * gi))
          return false;
    }
    return true;
  }

  bool is_abelian() const
  {
    for (const auto &a : elements_)
      for (const auto &b : elements_)
        if (a * b != b * a)
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

  /// elements commuting with the whole group
  MonomialGroup center() const
  {
    std::vector<MonomialMatrix> res;
    for (const auto &a : elements_) {
      bool central = true;
      for (const auto &b : elements_)
        if (a * b != b * a) {
          central = false;
          break;
        }
      if (central)
        res.push_back(a);
    }
    return from_elements(rank_, std::move(res));
  }

  /// subgroup generated by all commutators
  MonomialGroup derived_subgroup() const
  {
    std::vector<MonomialMatrix> comms;
    for (const auto &a : elements_)
      for (const auto &b : elements_)
        comms.push_back(a.inverse() * b.inverse() * a * b);
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_by(rank_, std::move(comms), elements_.size() + 1);
  }

  /// deterministic small generating set for the stored elements
  std::vector<MonomialMatrix> minimal_generating_set() const
  {
    return minimal_generators<MonomialMatrix, MonomialMatrixHash>(
        MonomialMatrix::identity(rank_), elements_);
  }

private:
  int rank_ = 0;
  std::vector<MonomialMatrix> gens_;
  std::vector<MonomialMatrix> elements_;
};

/** The involution flipping bit r of the 0-based coordinate index: coordinate
 * s maps to s +- 2^r according to the residue of s mod 2^{r+1}.  These k
 * commuting involutions generate an elementary abelian group acting regularly
 * on the 2^k coordinates.
 */
inline std::vector<std::uint8_t> sigma_r(int r, int k)
{
  if (r < 0 || r >= k)
    throw std::invalid_argument("sigma_r: need 0 <= r < k");
  int n = 1 << k;
  std::vector<std::uint8_t> perm(n);
  for (int s = 0; s < n; ++s)
    perm[s] = static_cast<std::uint8_t>(s ^ (1 << r));
  return perm;
}

namespace detail {

/// diagonal with entries (-1)^{bit r of the coordinate index}
inline MonomialMatrix a_r_matrix(int r, int k)
{
  int n = 1 << k;
  std::vector<UnitCoef> entries;
  for (int s = 0; s < n; ++s)
    entries.push_back(((s >> r) & 1) ? UnitCoef::minus_one()
                                     : UnitCoef::one());
  return MonomialMatrix::diagonal(std::move(entries));
}

/// permutation matrix of sigma_r
inline MonomialMatrix b_r_matrix(int r, int k)
{
  return {sigma_r(r, k), std::vector<UnitCoef>(std::size_t{1} << k,
                                               UnitCoef::one())};
}

/// re-embeds a generator into a larger rank at a coordinate offset
inline MonomialMatrix embed_block(const MonomialMatrix &g, int rank,
                                  int offset)
{
  auto res = MonomialMatrix::identity(rank);
  std::vector<std::uint8_t> perm(res.perm());
  std::vector<UnitCoef> coefs(res.coefs());
  for (int c = 0; c < g.rank(); ++c) {
    perm[offset + c] = static_cast<std::uint8_t>(offset + g.perm()[c]);
    coefs[offset + c] = g.coefs()[c];
  }
  return {std::move(perm), std::move(coefs)};
}

inline std::vector<MonomialMatrix> build_generators(const GroupSpec &spec)
{
  int n = spec.rank();
  std::vector<MonomialMatrix> gens;

  switch (spec.kind()) {
  case GroupSpec::Kind::gamma:
  case GroupSpec::Kind::gamma_bar: {
    int k = spec.k();
    if (spec.kind() == GroupSpec::Kind::gamma) {
      // scalar quaternion units: i and j generate all eight
      gens.push_back(MonomialMatrix::scalar(n, UnitCoef::i()));
      gens.push_back(MonomialMatrix::scalar(n, UnitCoef::j()));
    } else {
      // depth-m circle generator plus j
      gens.push_back(MonomialMatrix::scalar(
          n, UnitCoef::circle(DyadicAngle::make(1, spec.depth()))));
      gens.push_back(MonomialMatrix::scalar(n, UnitCoef::j()));
    }
    for (int r = 0; r < k; ++r) {
      gens.push_back(a_r_matrix(r, k));
      gens.push_back(b_r_matrix(r, k));
    }
    return gens;
  }
  case GroupSpec::Kind::elem: {
    for (int r = 0; r < spec.k(); ++r)
      gens.push_back(b_r_matrix(r, spec.k()));
    return gens;
  }
  case GroupSpec::Kind::wreath: {
    const auto &inner = spec.children()[0];
    int blk = inner.rank();
    int copies = 1 << spec.r();
    auto inner_gens = build_generators(inner);
    for (int b = 0; b < copies; ++b)
      for (const auto &g : inner_gens)
        gens.push_back(embed_block(g, n, b * blk));
    // block permutations from the regular elementary abelian group
    for (int r = 0; r < spec.r(); ++r) {
      auto blocks = sigma_r(r, spec.r());
      std::vector<std::uint8_t> perm(n);
      for (int b = 0; b < copies; ++b)
        for (int c = 0; c < blk; ++c)
          perm[b * blk + c] = static_cast<std::uint8_t>(blocks[b] * blk + c);
      gens.push_back({std::move(perm),
                      std::vector<UnitCoef>(n, UnitCoef::one())});
    }
    return gens;
  }
  case GroupSpec::Kind::product: {
    int offset = 0;
    for (const auto &child : spec.children()) {
      for (const auto &g : build_generators(child))
        gens.push_back(embed_block(g, n, offset));
      offset += child.rank();
    }
    return gens;
  }
  }
  return gens;
}

} // namespace detail

/// builds the group described by a spec as an explicit closed element list
inline MonomialGroup build(const GroupSpec &spec,
                           std::size_t cap = MonomialGroup::default_cap)
{
  if (spec.rank() > GroupSpec::max_rank)
    throw std::invalid_argument("build: total rank exceeds " +
                                std::to_string(GroupSpec::max_rank));
  return MonomialGroup::generated_by(spec.rank(),
                                     detail::build_generators(spec), cap);
}

/// the three structural subgroups: all-diagonal, diagonal-with-circle-entries,
/// and the center
struct StructuralParts {
  MonomialGroup p_d; // diagonal elements
  MonomialGroup p_t; // diagonal elements without j anywhere
  MonomialGroup z;   // center
};

inline StructuralParts structural_parts(const MonomialGroup &p)
{
  std::vector<MonomialMatrix> diag, torus;
  for (const auto &m : p.elements()) {
    if (!m.is_diagonal())
      continue;
    diag.push_back(m);
    if (m.is_torus_diagonal())
      torus.push_back(m);
  }
  StructuralParts res{MonomialGroup::from_elements(p.rank(), std::move(diag)),
                      MonomialGroup::from_elements(p.rank(),
                                                   std::move(torus)),
                      p.center()};
  return res;
}

/** Does P split over its diagonal part as P_D -> P -> (Z/2)^k?  Only
 * meaningful for the single-block gamma/gbar groups, where the quotient is
 * generated by the coordinate-permutation matrices; the witness complement is
 * their span.  Non-leaf specs are rejected.
 */
struct PdSplitReport {
  bool split = false;
  MonomialGroup complement; // witness when split
};

inline PdSplitReport pd_split_check(const GroupSpec &spec,
                                    const MonomialGroup &p)
{
  if (!spec.is_leaf() || spec.kind() == GroupSpec::Kind::elem)
    throw std::invalid_argument(
        "pd_split_check: spec must be a gamma or gbar leaf");

  int k = spec.k();
  auto parts = structural_parts(p);

  std::vector<MonomialMatrix> bs;
  for (int r = 0; r < k; ++r)
    bs.push_back(detail::b_r_matrix(r, k));
  auto complement = MonomialGroup::generated_by(p.rank(), std::move(bs));

  PdSplitReport rep;
  rep.complement = complement;
  if (complement.order() != (std::size_t{1} << k))
    return rep;
  for (const auto &m : complement.elements()) {
    if (!p.contains(m))
      return rep;
    if (m.is_diagonal() && !m.is_identity())
      return rep; // nontrivial intersection with the diagonal part
  }
  rep.split = parts.p_d.order() * complement.order() == p.order();
  return rep;
}

/** All monomial matrices whose coefficient angles have level <= depth.
 * Throws when the enumeration would exceed the cap.
 */
inline std::vector<MonomialMatrix> ambient_monomial_group(int rank, int depth,
                                                          std::size_t cap)
{
  // n! * (2^{depth+1})^n elements
  double estimate = 1;
  for (int i = 2; i <= rank; ++i)
    estimate *= i;
  for (int i = 0; i < rank; ++i)
    estimate *= static_cast<double>(std::size_t{2} << depth);
  if (estimate > static_cast<double>(cap))
    throw std::invalid_argument(
        "ambient_monomial_group: enumeration exceeds cap");

  auto coef_pool = unit_coefs_at_depth(depth);

  std::vector<std::uint8_t> perm(rank);
  for (int i = 0; i < rank; ++i)
    perm[i] = static_cast<std::uint8_t>(i);

  std::vector<MonomialMatrix> res;
  do {
    std::vector<std::size_t> pick(rank, 0);
    while (true) {
      std::vector<UnitCoef> coefs;
      for (int i = 0; i < rank; ++i)
        coefs.push_back(coef_pool[pick[i]]);
      res.emplace_back(perm, std::move(coefs));

      int i = 0;
      while (i < rank && ++pick[i] == coef_pool.size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == rank)
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(res.begin(), res.end());
  return res;
}

/** Elements of the depth-m monomial group normalizing P.  This is only the
 * discrete-normalizer part of the true normalizer in the ambient Lie group,
 * hence the permanent `partial` flag; the quotient order is a lower bound.
 */
struct NormalizerReport {
  MonomialGroup normalizer;
  bool contains_p = false;
  std::size_t quotient_order = 0; // |N| / |P| when P is contained in N
  bool partial = true;            // always: ambient Lie elements not searched
};

inline NormalizerReport normalizer_in_monomial(const MonomialGroup &p,
                                               int depth,
                                               std::size_t cap = (1u << 20))
{
  auto gens = p.minimal_generating_set();

  std::vector<MonomialMatrix> result;
  for (const auto &g : ambient_monomial_group(p.rank(), depth, cap)) {
    auto gi = g.inverse();
    bool normalizes = true;
    for (const auto &h : gens)
      if (!p.contains(g * h * gi)) {
        normalizes = false;
        break;
      }
    if (normalizes)
      result.push_back(g);
  }

  NormalizerReport rep;
  rep.normalizer = MonomialGroup::from_elements(p.rank(), std::move(result));
  rep.contains_p = true;
  for (const auto &m : p.elements())
    if (!rep.normalizer.contains(m)) {
      rep.contains_p = false;
      break;
    }
  if (rep.contains_p)
    rep.quotient_order = rep.normalizer.order() / p.order();
  return rep;
}

/// the group of diagonal matrices with entries +-1 (ambient 2-torsion)
inline MonomialGroup diagonal_two_torsion(int rank)
{
  std::vector<MonomialMatrix> gens;
  for (int i = 0; i < rank; ++i) {
    std::vector<UnitCoef> entries(rank, UnitCoef::one());
    entries[i] = UnitCoef::minus_one();
    gens.push_back(MonomialMatrix::diagonal(std::move(entries)));
  }
  return MonomialGroup::generated_by(rank, std::move(gens));
}

} // namespace spnalg

#endif // SPNALG_MONOMIAL_GROUP_HPP
