#ifndef SPNALG_COHOMOLOGY_HPP
#define SPNALG_COHOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spnalg/abelian2.hpp"
#include "spnalg/finite_action.hpp"

namespace spnalg {

namespace detail {

/** Everything below works in "scaled coordinates": a cochain value in the
 * j-th summand Z/2^{m_j} is represented by a free variable u_j over Z/2^E
 * (E = max m_j); the actual value is u_j mod 2^{m_j}, so the vectors
 * 2^{m_j} e_j act as padding that must be quotiented away.
 */
inline std::vector<std::vector<std::uint32_t>> padding_rows(
    const ModuleShape &mod, int copies)
{
  std::vector<std::vector<std::uint32_t>> rows;
  int d = mod.dims();
  int e = mod.max_exponent();
  for (int g = 0; g < copies; ++g)
    for (int j = 0; j < d; ++j)
      if (mod.exponent(j) < e) {
        std::vector<std::uint32_t> row(
            static_cast<std::size_t>(copies) * d, 0);
        row[static_cast<std::size_t>(g) * d + j] = mod.modulus(j);
        rows.push_back(std::move(row));
      }
  return rows;
}

} // namespace detail

/// shape of the invariant submodule {m : g.m = m for all g}
inline AbelianGroupShape h0(const FiniteAction &act)
{
  const ModuleShape &mod = act.module();
  int d = mod.dims();
  int e = mod.max_exponent();
  std::size_t n = act.group_order();

  if (e == 1) {
    F2RowSpace cons(d);
    for (std::size_t g = 0; g < n; ++g) {
      const ActionMatrix &a = act.matrix(g);
      for (int j = 0; j < d; ++j) {
        auto row = cons.zero_row();
        bool nonzero = false;
        for (int i = 0; i < d; ++i)
          if (((a[j][i] ^ (i == j ? 1u : 0u)) & 1u) != 0) {
            F2RowSpace::set_bit(row, i);
            nonzero = true;
          }
        if (nonzero)
          cons.insert(std::move(row));
      }
    }
    return AbelianGroupShape::homocyclic(d - cons.rank(), 1);
  }

  Staircase cons(d, e);
  for (std::size_t g = 0; g < n; ++g) {
    const ActionMatrix &a = act.matrix(g);
    for (int j = 0; j < d; ++j) {
      std::vector<std::uint32_t> row(d, 0);
      std::uint32_t scale = std::uint32_t{1} << (e - mod.exponent(j));
      for (int i = 0; i < d; ++i) {
        std::uint32_t v = a[j][i];
        if (i == j)
          v -= 1; // masked inside the staircase
        row[i] += v * scale;
      }
      cons.insert(std::move(row));
    }
  }
  return quotient_shape(d, e, cons.null_space(), detail::padding_rows(mod, 1));
}

/** Shape of H¹ = Z¹/B¹: cocycles are functions on all group elements with
 * f(gh) = f(g) + g.f(h), the condition imposed for every pair (g, h);
 * coboundaries are g -> g.m - m.
 */
inline AbelianGroupShape h1(const FiniteAction &act)
{
  const ModuleShape &mod = act.module();
  int d = mod.dims();
  int e = mod.max_exponent();
  std::size_t n = act.group_order();
  if (n > 512)
    throw std::invalid_argument("h1: group order exceeds 512");
  if (mod.size() > (std::uint64_t{1} << 24))
    throw std::invalid_argument("h1: module larger than 2^24");

  std::size_t vars = n * static_cast<std::size_t>(d);

  if (e == 1) {
    // mod-2 fast path with bitset rows
    F2RowSpace cons(static_cast<int>(vars));
    for (std::size_t a = 0; a < n; ++a) {
      const ActionMatrix &ma = act.matrix(a);
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = act.multiply(a, b);
        for (int j = 0; j < d; ++j) {
          auto row = cons.zero_row();
          F2RowSpace::set_bit(row, static_cast<int>(ab * d) + j);
          F2RowSpace::set_bit(row, static_cast<int>(a * d) + j);
          for (int i = 0; i < d; ++i)
            if (ma[j][i] & 1u)
              F2RowSpace::set_bit(row, static_cast<int>(b * d) + i);
          cons.insert(std::move(row));
        }
      }
    }
    F2RowSpace cob(static_cast<int>(vars));
    for (int i0 = 0; i0 < d; ++i0) {
      auto row = cob.zero_row();
      for (std::size_t g = 0; g < n; ++g) {
        const ActionMatrix &mg = act.matrix(g);
        for (int j = 0; j < d; ++j)
          if (((mg[j][i0] ^ (j == i0 ? 1u : 0u)) & 1u) != 0)
            F2RowSpace::set_bit(row, static_cast<int>(g * d) + j);
      }
      cob.insert(std::move(row));
    }
    int dim = static_cast<int>(vars) - cons.rank() - cob.rank();
    return AbelianGroupShape::homocyclic(dim, 1);
  }

  Staircase cons(static_cast<int>(vars), e);
  for (std::size_t a = 0; a < n; ++a) {
    const ActionMatrix &ma = act.matrix(a);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = act.multiply(a, b);
      for (int j = 0; j < d; ++j) {
        std::vector<std::uint32_t> row(vars, 0);
        std::uint32_t scale = std::uint32_t{1} << (e - mod.exponent(j));
        row[ab * d + j] += scale;
        row[a * d + j] -= scale;
        for (int i = 0; i < d; ++i)
          row[b * d + i] -= ma[j][i] * scale;
        cons.insert(std::move(row));
      }
    }
  }

  auto b_gens = detail::padding_rows(mod, static_cast<int>(n));
  for (int i0 = 0; i0 < d; ++i0) {
    std::vector<std::uint32_t> row(vars, 0);
    for (std::size_t g = 0; g < n; ++g) {
      const ActionMatrix &mg = act.matrix(g);
      for (int j = 0; j < d; ++j) {
        std::uint32_t v = mg[j][i0];
        if (j == i0)
          v -= 1;
        row[g * d + j] = v;
      }
    }
    b_gens.push_back(std::move(row));
  }

  return quotient_shape(static_cast<int>(vars), e, cons.null_space(), b_gens);
}

/// H⁰, H¹, H² of a cyclic group, by direct element enumeration
struct CyclicCohomology {
  AbelianGroupShape h0, h1, h2;
};

namespace detail {

/// all elements of the module in mixed-radix order
class ModuleElements {
public:
  explicit ModuleElements(const ModuleShape &mod)
  : mod_(&mod)
  {
    if (mod.size() > (std::uint64_t{1} << 12))
      throw std::invalid_argument(
          "cyclic cohomology: module larger than 2^12");
    count_ = mod.size();
  }

  std::uint64_t count() const { return count_; }

  std::vector<std::uint32_t> element(std::uint64_t idx) const
  {
    int d = mod_->dims();
    std::vector<std::uint32_t> v(d);
    for (int j = 0; j < d; ++j) {
      v[j] = static_cast<std::uint32_t>(idx & (mod_->modulus(j) - 1));
      idx >>= mod_->exponent(j);
    }
    return v;
  }

  std::uint64_t index(const std::vector<std::uint32_t> &v) const
  {
    std::uint64_t idx = 0;
    int shift = 0;
    for (int j = 0; j < mod_->dims(); ++j) {
      idx |= std::uint64_t{v[j] & (mod_->modulus(j) - 1)} << shift;
      shift += mod_->exponent(j);
    }
    return idx;
  }

  std::uint64_t apply(const ActionMatrix &a, std::uint64_t idx) const
  {
    auto v = element(idx);
    int d = mod_->dims();
    std::vector<std::uint32_t> w(d, 0);
    for (int j = 0; j < d; ++j) {
      std::uint64_t sum = 0;
      for (int i = 0; i < d; ++i)
        sum += std::uint64_t{a[j][i]} * v[i];
      w[j] = static_cast<std::uint32_t>(sum & (mod_->modulus(j) - 1));
    }
    return index(w);
  }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const
  {
    auto v = element(x);
    auto w = element(y);
    for (int j = 0; j < mod_->dims(); ++j)
      v[j] = (v[j] + w[j]) & (mod_->modulus(j) - 1);
    return index(v);
  }

  std::uint64_t negate(std::uint64_t x) const
  {
    auto v = element(x);
    for (int j = 0; j < mod_->dims(); ++j)
      v[j] = (mod_->modulus(j) - v[j]) & (mod_->modulus(j) - 1);
    return index(v);
  }

  std::uint64_t double_elem(std::uint64_t x) const { return add(x, x); }

private:
  const ModuleShape *mod_;
  std::uint64_t count_;
};

/// shape of K/I for sorted element-index sets with I a subgroup of K
inline AbelianGroupShape quotient_shape_of_sets(
    const ModuleElements &elems, int e, const std::vector<std::uint64_t> &k,
    const std::vector<std::uint64_t> &i)
{
  auto in_i = [&](std::uint64_t x) {
    return std::binary_search(i.begin(), i.end(), x);
  };

  // log2 |ker(2^t) on K/I| = log2 #{x in K : 2^t x in I} - log2 |I|
  std::vector<int> log_kers;
  for (int t = 0; t <= e; ++t) {
    std::uint64_t count = 0;
    for (std::uint64_t x : k) {
      std::uint64_t y = x;
      for (int s = 0; s < t; ++s)
        y = elems.double_elem(y);
      if (in_i(y))
        ++count;
    }
    if (count % i.size() != 0 || (count / i.size()) == 0 ||
        ((count / i.size()) & ((count / i.size()) - 1)) != 0)
      throw std::logic_error("cyclic cohomology: non-2-power kernel count");
    std::uint64_t q = count / i.size();
    int lg = 0;
    while ((std::uint64_t{1} << lg) < q)
      ++lg;
    log_kers.push_back(lg);
  }

  std::vector<int> corank(e);
  for (int t = 0; t < e; ++t)
    corank[t] = log_kers[t + 1] - log_kers[t];
  return shape_from_corank_profile(corank);
}

} // namespace detail

/** Cohomology of Z/k acting through sigma (which must satisfy sigma^k = 1):
 * H⁰ = ker(sigma-1), H¹ = ker(N)/im(sigma-1), H² = ker(sigma-1)/im(N) with
 * N = 1 + sigma + ... + sigma^{k-1}.  Computed by enumerating the module.
 */
inline CyclicCohomology h_cyclic(int k, const ModuleShape &mod,
                                 const ActionMatrix &sigma_in)
{
  if (k < 1 || k > 4096)
    throw std::invalid_argument("h_cyclic: order out of range");
  ActionMatrix sigma = detail::reduce_matrix(mod, sigma_in);
  detail::check_matrix_well_defined(mod, sigma);

  ActionMatrix power = detail::identity_matrix(mod);
  for (int t = 0; t < k; ++t)
    power = detail::multiply_matrices(mod, power, sigma);
  if (power != detail::identity_matrix(mod))
    throw std::invalid_argument(
        "h_cyclic: generator action does not have order dividing k");

  detail::ModuleElements elems(mod);
  std::uint64_t size = elems.count();
  int e = mod.max_exponent();

  // tabulate sigma, sigma - 1 and the norm N = sum of powers
  std::vector<std::uint64_t> sig(size), sig_minus_1(size), norm(size);
  for (std::uint64_t x = 0; x < size; ++x)
    sig[x] = elems.apply(sigma, x);
  for (std::uint64_t x = 0; x < size; ++x) {
    sig_minus_1[x] = elems.add(sig[x], elems.negate(x));
    std::uint64_t acc = x;
    std::uint64_t pow = x;
    for (int t = 1; t < k; ++t) {
      pow = sig[pow];
      acc = elems.add(acc, pow);
    }
    norm[x] = acc;
  }

  auto kernel_of = [&](const std::vector<std::uint64_t> &map) {
    std::vector<std::uint64_t> ker;
    for (std::uint64_t x = 0; x < size; ++x)
      if (map[x] == 0)
        ker.push_back(x);
    return ker;
  };
  auto image_of = [&](const std::vector<std::uint64_t> &map) {
    std::vector<std::uint64_t> im(map);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  };

  auto ker_s1 = kernel_of(sig_minus_1);
  auto im_s1 = image_of(sig_minus_1);
  auto ker_n = kernel_of(norm);
  auto im_n = image_of(norm);

  std::vector<std::uint64_t> zero{0};
  CyclicCohomology res;
  res.h0 = detail::quotient_shape_of_sets(elems, e, ker_s1, zero);
  res.h1 = detail::quotient_shape_of_sets(elems, e, ker_n, im_s1);
  res.h2 = detail::quotient_shape_of_sets(elems, e, ker_s1, im_n);
  return res;
}

/** Shapiro reduction: when the group permutes the given blocks of module
 * coordinates transitively, H¹ of the whole action equals H¹ of the
 * stabilizer of the first block acting on that block.  Returns the reduced
 * action.
 */
inline FiniteAction shapiro_reduce(const FiniteAction &act,
                                   const std::vector<std::vector<int>> &blocks)
{
  const ModuleShape &mod = act.module();
  int d = mod.dims();
  std::size_t n = act.group_order();
  int nblocks = static_cast<int>(blocks.size());
  if (nblocks == 0)
    throw std::invalid_argument("shapiro_reduce: no blocks given");

  std::vector<int> block_of(d, -1);
  for (int b = 0; b < nblocks; ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("shapiro_reduce: empty block");
    for (int c : blocks[b]) {
      if (c < 0 || c >= d || block_of[c] != -1)
        throw std::invalid_argument(
            "shapiro_reduce: blocks do not partition the coordinates");
      block_of[c] = b;
    }
  }
  for (int c = 0; c < d; ++c)
    if (block_of[c] == -1)
      throw std::invalid_argument(
          "shapiro_reduce: blocks do not partition the coordinates");

  // each element must send every block into a single block
  std::vector<std::vector<int>> block_map(n, std::vector<int>(nblocks, -1));
  for (std::size_t g = 0; g < n; ++g) {
    const ActionMatrix &a = act.matrix(g);
    for (int b = 0; b < nblocks; ++b) {
      int target = -1;
      for (int i : blocks[b])
        for (int j = 0; j < d; ++j)
          if (a[j][i] != 0) {
            if (target == -1)
              target = block_of[j];
            else if (target != block_of[j])
              throw std::invalid_argument(
                  "shapiro_reduce: the action does not respect the blocks");
          }
      if (target == -1)
        throw std::invalid_argument(
            "shapiro_reduce: the action does not respect the blocks");
      block_map[g][b] = target;
    }
  }

  // transitivity of the block action
  {
    std::vector<bool> seen(nblocks, false);
    seen[0] = true;
    std::vector<int> queue{0};
    while (!queue.empty()) {
      int b = queue.back();
      queue.pop_back();
      for (std::size_t g = 0; g < n; ++g) {
        int t = block_map[g][b];
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    for (int b = 0; b < nblocks; ++b)
      if (!seen[b])
        throw std::invalid_argument(
            "shapiro_reduce: the group does not permute the blocks "
            "transitively");
  }

  // stabilizer of block 0, with matrices restricted to block 0
  const std::vector<int> &b0 = blocks[0];
  std::vector<int> exps;
  for (int c : b0)
    exps.push_back(mod.exponent(c));

  std::vector<std::vector<std::uint16_t>> perms;
  std::vector<ActionMatrix> mats;
  int d0 = static_cast<int>(b0.size());
  for (std::size_t g = 0; g < n; ++g) {
    if (block_map[g][0] != 0)
      continue;
    perms.push_back(act.element_perm(g));
    const ActionMatrix &a = act.matrix(g);
    ActionMatrix r(d0, std::vector<std::uint32_t>(d0, 0));
    for (int j = 0; j < d0; ++j)
      for (int i = 0; i < d0; ++i)
        r[j][i] = a[b0[j]][b0[i]];
    mats.push_back(std::move(r));
  }

  return FiniteAction::from_elements(act.degree(), perms, mats,
                                     ModuleShape(std::move(exps)));
}

} // namespace spnalg

#endif // SPNALG_COHOMOLOGY_HPP
