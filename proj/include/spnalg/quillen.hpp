#ifndef SPNALG_QUILLEN_HPP
#define SPNALG_QUILLEN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "spnalg/torus.hpp"

namespace spnalg {

/** Skeleton of the category of nontrivial elementary abelian subgroups of the
 * diagonal 2-torsion (Z/2)^n, taken up to coordinate permutations.  Sign
 * changes act trivially on 2-torsion, so the symmetric group is the full
 * acting group here.
 *
 * Subgroups are bitmask sets: element masks over n coordinates, the zero
 * vector included.  A class is keyed by the lexicographically smallest sorted
 * element list over all coordinate permutations.
 */
struct QuillenClass {
  int rank = 0;                        // dimension over F_2
  std::string descriptor;              // character-multiset partition label
  std::vector<std::uint32_t> rep;      // canonical sorted element masks
  std::size_t orbit_size = 0;          // number of subgroups in the class
};

struct QuillenClassCount {
  int rank = 0;
  std::string descriptor;
  std::size_t classes = 0; // classes sharing (rank, descriptor)
};

namespace detail {

inline std::vector<std::uint32_t> span_of(std::vector<std::uint32_t> basis,
                                          std::uint32_t extra)
{
  basis.push_back(extra);
  std::set<std::uint32_t> span{0};
  for (auto b : basis) {
    std::set<std::uint32_t> next = span;
    for (auto v : span)
      next.insert(v ^ b);
    span = std::move(next);
  }
  return {span.begin(), span.end()};
}

inline std::vector<std::uint32_t>
permute_subgroup(const std::vector<std::uint32_t> &sub,
                 const std::vector<int> &perm)
{
  std::vector<std::uint32_t> res;
  res.reserve(sub.size());
  for (auto v : sub) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if ((v >> i) & 1u)
        w |= 1u << perm[i];
    res.push_back(w);
  }
  std::sort(res.begin(), res.end());
  return res;
}

inline std::vector<std::vector<int>> all_permutations(int n)
{
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = i;
  std::vector<std::vector<int>> res;
  do
    res.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return res;
}

inline int subgroup_rank(const std::vector<std::uint32_t> &sub)
{
  int r = 0;
  while ((std::size_t{1} << r) < sub.size())
    ++r;
  return r;
}

/// reduced row echelon basis of the subgroup
inline std::vector<std::uint32_t> f2_basis(const std::vector<std::uint32_t> &sub)
{
  std::vector<std::uint32_t> basis;
  for (auto v : sub) {
    for (auto b : basis)
      v = std::min(v, v ^ b);
    if (v)
      basis.push_back(v);
  }
  return basis;
}

/** Descriptor: each coordinate restricts to a character of the subgroup;
 * group coordinates by equal characters.  The label lists the multiplicities
 * of the nonzero characters in decreasing order and appends "0^z" when z
 * coordinates see the zero character, e.g. "2+1" or "1+1+0^2".
 */
inline std::string char_multiset_descriptor(const std::vector<std::uint32_t> &sub,
                                            int n)
{
  auto basis = f2_basis(sub);
  std::map<std::uint32_t, int> mult; // character (as values on basis) -> count
  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t chi = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((basis[b] >> i) & 1u)
        chi |= 1u << b;
    if (chi == 0)
      ++zeros;
    else
      ++mult[chi];
  }

  std::vector<int> parts;
  for (auto &[chi, m] : mult)
    parts.push_back(m);
  std::sort(parts.rbegin(), parts.rend());

  std::string res;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      res += "+";
    res += std::to_string(parts[i]);
  }
  if (zeros > 0) {
    if (!res.empty())
      res += "+";
    res += "0^" + std::to_string(zeros);
  }
  return res;
}

} // namespace detail

/** All nontrivial elementary abelian subgroups of (Z/2)^n up to coordinate
 * permutation, enumerated by breadth-first span extension and keyed by the
 * minimal permuted element list.  Sorted by (rank, descriptor, representative).
 */
inline std::vector<QuillenClass> quillen_classes(int n)
{
  if (n < 1 || n > 6)
    throw std::invalid_argument("quillen_classes: rank out of range");

  // enumerate every subgroup
  std::set<std::vector<std::uint32_t>> all;
  std::vector<std::vector<std::uint32_t>> queue{{0u}};
  all.insert({0u});
  while (!queue.empty()) {
    auto sub = queue.back();
    queue.pop_back();
    for (std::uint32_t v = 1; v < (1u << n); ++v) {
      if (std::binary_search(sub.begin(), sub.end(), v))
        continue;
      auto bigger = detail::span_of(detail::f2_basis(sub), v);
      if (all.insert(bigger).second)
        queue.push_back(bigger);
    }
  }

  auto perms = detail::all_permutations(n);

  std::map<std::vector<std::uint32_t>, std::size_t> orbit_sizes;
  for (const auto &sub : all) {
    if (sub.size() == 1)
      continue; // trivial subgroup excluded
    std::vector<std::uint32_t> canon = sub;
    for (const auto &p : perms)
      canon = std::min(canon, detail::permute_subgroup(sub, p));
    ++orbit_sizes[canon];
  }

  std::vector<QuillenClass> res;
  for (const auto &[rep, count] : orbit_sizes) {
    QuillenClass c;
    c.rank = detail::subgroup_rank(rep);
    c.descriptor = detail::char_multiset_descriptor(rep, n);
    c.rep = rep;
    c.orbit_size = count;
    res.push_back(c);
  }
  std::sort(res.begin(), res.end(), [](const auto &a, const auto &b) {
    return std::tie(a.rank, a.descriptor, a.rep) <
           std::tie(b.rank, b.descriptor, b.rep);
  });
  return res;
}

/// classes aggregated by (rank, descriptor), the public census shape
inline std::vector<QuillenClassCount> quillen_objects(int n)
{
  std::map<std::pair<int, std::string>, std::size_t> agg;
  for (const auto &c : quillen_classes(n))
    ++agg[{c.rank, c.descriptor}];
  std::vector<QuillenClassCount> res;
  for (const auto &[key, classes] : agg)
    res.push_back({key.first, key.second, classes});
  return res;
}

inline std::size_t quillen_class_total(int n)
{ return quillen_classes(n).size(); }

inline std::size_t quillen_rank_count(int n, int rank)
{
  std::size_t res = 0;
  for (const auto &c : quillen_classes(n))
    if (c.rank == rank)
      ++res;
  return res;
}

/// representative subgroup as actual torus 2-torsion points
inline TorusSubgroup quillen_representative(int n, const QuillenClass &c)
{
  std::vector<TorusPoint> gens;
  for (auto mask : detail::f2_basis(c.rep)) {
    auto t = TorusPoint::zero(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u)
        t.at(i) = DyadicAngle::half();
    gens.push_back(t);
  }
  return TorusSubgroup::generated_by(n, std::move(gens));
}

/** Morphisms between class representatives in the permutation-quotient
 * category: distinct group monomorphisms src -> dst that are restrictions of
 * coordinate permutations carrying src into dst.  Supported for src rank <= 2.
 */
inline std::size_t quillen_morphism_count(int n, const QuillenClass &src,
                                          const QuillenClass &dst)
{
  if (detail::subgroup_rank(src.rep) > 2)
    throw std::invalid_argument("quillen_morphism_count: source rank > 2");

  std::set<std::vector<std::uint32_t>> maps; // images of src elements in order
  for (const auto &p : detail::all_permutations(n)) {
    std::vector<std::uint32_t> image;
    bool ok = true;
    for (auto v : src.rep) {
      std::uint32_t w = 0;
      for (int i = 0; i < n; ++i)
        if ((v >> i) & 1u)
          w |= 1u << p[i];
      if (!std::binary_search(dst.rep.begin(), dst.rep.end(), w)) {
        ok = false;
        break;
      }
      image.push_back(w);
    }
    if (ok)
      maps.insert(image);
  }
  return maps.size();
}

} // namespace spnalg

#endif // SPNALG_QUILLEN_HPP
