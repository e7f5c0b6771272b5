#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "spnalg/cohomology.hpp"
#include "spnalg/finite_action.hpp"

using namespace spnalg;

namespace {

// ---------------------------------------------------------------------------
// brute-force helpers for validating the exact linear algebra
// ---------------------------------------------------------------------------

using Vec = std::vector<std::uint32_t>;

std::set<Vec> brute_span(const std::vector<Vec> &gens, int cols, int e)
{
  std::uint32_t mask = (std::uint32_t{1} << e) - 1;
  std::set<Vec> span;
  std::vector<Vec> queue;
  Vec zero(cols, 0);
  span.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (const auto &g : gens) {
      Vec w(cols);
      for (int c = 0; c < cols; ++c)
        w[c] = (v[c] + g[c]) & mask;
      if (span.insert(w).second)
        queue.push_back(w);
    }
  }
  return span;
}

std::uint32_t dot_mod(const Vec &a, const Vec &b, std::uint32_t mask)
{
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::uint64_t{a[i]} * b[i];
  return static_cast<std::uint32_t>(s) & mask;
}

// every vector of (Z/2^e)^cols, for exhaustive scans
std::vector<Vec> all_vectors(int cols, int e)
{
  std::uint32_t mod = std::uint32_t{1} << e;
  std::vector<Vec> res;
  Vec v(cols, 0);
  while (true) {
    res.push_back(v);
    int c = 0;
    while (c < cols) {
      v[c] = (v[c] + 1) % mod;
      if (v[c] != 0)
        break;
      ++c;
    }
    if (c == cols)
      break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// action builders
// ---------------------------------------------------------------------------

ActionMatrix perm_matrix(const std::vector<std::uint16_t> &p)
{
  int d = static_cast<int>(p.size());
  ActionMatrix m(d, std::vector<std::uint32_t>(d, 0));
  for (int i = 0; i < d; ++i)
    m[p[i]][i] = 1;
  return m;
}

ActionMatrix scalar_matrix(int d, std::uint32_t v)
{
  ActionMatrix m(d, std::vector<std::uint32_t>(d, 0));
  for (int j = 0; j < d; ++j)
    m[j][j] = v;
  return m;
}

// Z/k generated by a k-cycle, acting through sigma
FiniteAction cyclic_action(int k, std::vector<int> exps, ActionMatrix sigma)
{
  std::vector<std::uint16_t> cycle(k);
  for (int i = 0; i < k; ++i)
    cycle[i] = static_cast<std::uint16_t>((i + 1) % k);
  return FiniteAction(k, {cycle}, {std::move(sigma)},
                      ModuleShape(std::move(exps)));
}

FiniteAction trivial_group_action(std::vector<int> exps)
{
  return FiniteAction(1, {}, {}, ModuleShape(std::move(exps)));
}

// (Z/2)^k acting on (F_2)^{2^k} by translation (the regular representation)
FiniteAction regular_translation_action(int k)
{
  int n = 1 << k;
  std::vector<std::vector<std::uint16_t>> gens;
  std::vector<ActionMatrix> mats;
  for (int r = 0; r < k; ++r) {
    std::vector<std::uint16_t> p(n);
    for (int s = 0; s < n; ++s)
      p[s] = static_cast<std::uint16_t>(s ^ (1 << r));
    mats.push_back(perm_matrix(p));
    gens.push_back(std::move(p));
  }
  return FiniteAction(n, std::move(gens), std::move(mats),
                      ModuleShape(std::vector<int>(n, 1)));
}

// E_{2^{k-r}} wreath E_{2^r}, permuting the 2^k coordinates of (F_2)^{2^k}
// in 2^r blocks of size 2^{k-r}
FiniteAction wreath_translation_action(int k, int r)
{
  int n = 1 << k;
  int bsize = 1 << (k - r);
  std::vector<std::vector<std::uint16_t>> gens;
  std::vector<ActionMatrix> mats;
  for (int s = 0; s < k - r; ++s) { // inner translations on block 0
    std::vector<std::uint16_t> p(n);
    for (int c = 0; c < n; ++c)
      p[c] = static_cast<std::uint16_t>(c < bsize ? c ^ (1 << s) : c);
    mats.push_back(perm_matrix(p));
    gens.push_back(std::move(p));
  }
  for (int t = 0; t < r; ++t) { // block translations
    std::vector<std::uint16_t> p(n);
    for (int c = 0; c < n; ++c) {
      int b = c / bsize, off = c % bsize;
      p[c] = static_cast<std::uint16_t>((b ^ (1 << t)) * bsize + off);
    }
    mats.push_back(perm_matrix(p));
    gens.push_back(std::move(p));
  }
  return FiniteAction(n, std::move(gens), std::move(mats),
                      ModuleShape(std::vector<int>(n, 1)));
}

std::vector<std::vector<int>> point_blocks(int d)
{
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < d; ++c)
    blocks.push_back({c});
  return blocks;
}

std::vector<std::vector<int>> sized_blocks(int d, int bsize)
{
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < d; c += bsize) {
    std::vector<int> b;
    for (int i = 0; i < bsize; ++i)
      b.push_back(c + i);
    blocks.push_back(b);
  }
  return blocks;
}

// all automorphisms of the module (valid invertible matrices), brute force
std::vector<ActionMatrix> all_automorphisms(const ModuleShape &mod)
{
  int d = mod.dims();
  detail::ModuleElements elems(mod);
  std::uint64_t size = elems.count();

  // entry (j, i) runs over multiples of 2^{max(0, m_j - m_i)} below 2^{m_j}
  struct Slot {
    int j, i;
    std::uint32_t step, count;
  };
  std::vector<Slot> slots;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      int need = std::max(0, mod.exponent(j) - mod.exponent(i));
      Slot s;
      s.j = j;
      s.i = i;
      s.step = std::uint32_t{1} << need;
      s.count = std::uint32_t{1} << (mod.exponent(j) - need);
      slots.push_back(s);
    }

  std::vector<ActionMatrix> autos;
  std::vector<std::uint32_t> idx(slots.size(), 0);
  while (true) {
    ActionMatrix a(d, std::vector<std::uint32_t>(d, 0));
    for (std::size_t s = 0; s < slots.size(); ++s)
      a[slots[s].j][slots[s].i] = idx[s] * slots[s].step;
    // bijectivity on elements
    std::vector<bool> hit(size, false);
    bool bijective = true;
    for (std::uint64_t x = 0; x < size && bijective; ++x) {
      std::uint64_t y = elems.apply(a, x);
      if (hit[y])
        bijective = false;
      hit[y] = true;
    }
    if (bijective)
      autos.push_back(std::move(a));

    std::size_t s = 0;
    while (s < slots.size()) {
      if (++idx[s] < slots[s].count)
        break;
      idx[s] = 0;
      ++s;
    }
    if (s == slots.size())
      break;
  }
  return autos;
}

int matrix_order(const ModuleShape &mod, const ActionMatrix &a)
{
  ActionMatrix id = detail::identity_matrix(mod);
  ActionMatrix p = detail::reduce_matrix(mod, a);
  int k = 1;
  while (p != id) {
    p = detail::multiply_matrices(mod, p, a);
    ++k;
    REQUIRE(k <= 512);
  }
  return k;
}

} // namespace

TEST_CASE("abelian group shapes")
{
  CHECK(AbelianGroupShape::trivial().str() == "1");
  CHECK(AbelianGroupShape::trivial().order() == 1);
  CHECK(AbelianGroupShape::trivial().is_trivial());

  AbelianGroupShape s = AbelianGroupShape::homocyclic(2, 3);
  CHECK(s.str() == "Z/8 x Z/8");
  CHECK(s.order() == 64);

  AbelianGroupShape mixed{{2, 4}};
  CHECK(mixed.str() == "Z/2 x Z/4");
  CHECK(mixed == AbelianGroupShape{{2, 4}});
  CHECK(mixed != AbelianGroupShape{{2, 2}});
}

TEST_CASE("staircase row spaces match brute force")
{
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 24; ++trial) {
    int e = 1 + static_cast<int>(rng() % 4);
    int cols = 3 + static_cast<int>(rng() % 2);
    int nrows = 1 + static_cast<int>(rng() % 4);
    std::uint32_t mod = std::uint32_t{1} << e;
    std::uint32_t mask = mod - 1;

    std::vector<Vec> gens;
    for (int r = 0; r < nrows; ++r) {
      Vec row(cols);
      for (auto &v : row)
        v = rng() % mod;
      gens.push_back(row);
    }

    Staircase st(cols, e);
    for (const auto &g : gens)
      st.insert(g);

    auto span = brute_span(gens, cols, e);
    CHECK((std::uint64_t{1} << st.log2_order()) == span.size());

    auto everything = all_vectors(cols, e);
    for (const auto &v : everything)
      CHECK(st.contains(v) == (span.count(v) > 0));

    // the null space: exactly the vectors annihilating every generator
    auto null_gens = st.null_space();
    std::set<Vec> null_brute;
    for (const auto &v : everything) {
      bool ok = true;
      for (const auto &g : gens)
        if (dot_mod(g, v, mask) != 0) {
          ok = false;
          break;
        }
      if (ok)
        null_brute.insert(v);
    }
    for (const auto &ng : null_gens)
      CHECK(null_brute.count(ng) > 0);
    CHECK(brute_span(null_gens, cols, e) == null_brute);
  }
}

TEST_CASE("quotient shapes match brute force")
{
  std::mt19937 rng(97);
  for (int trial = 0; trial < 24; ++trial) {
    int e = 1 + static_cast<int>(rng() % 4);
    int cols = 3;
    std::uint32_t mod = std::uint32_t{1} << e;
    std::uint32_t mask = mod - 1;

    std::vector<Vec> a_gens;
    int na = 1 + static_cast<int>(rng() % 3);
    for (int r = 0; r < na; ++r) {
      Vec row(cols);
      for (auto &v : row)
        v = rng() % mod;
      a_gens.push_back(row);
    }
    // subgroup generators: random scaled combinations of the a-generators
    std::vector<Vec> b_gens;
    int nb = 1 + static_cast<int>(rng() % 2);
    for (int r = 0; r < nb; ++r) {
      Vec row(cols, 0);
      for (const auto &a : a_gens) {
        std::uint32_t c = (rng() % mod) & ~1u; // even multiple
        for (int i = 0; i < cols; ++i)
          row[i] = (row[i] + c * a[i]) & mask;
      }
      b_gens.push_back(row);
    }

    AbelianGroupShape q = quotient_shape(cols, e, a_gens, b_gens);

    auto sa = brute_span(a_gens, cols, e);
    auto sb = brute_span(b_gens, cols, e);
    CHECK(q.order() == sa.size() / sb.size());

    // kernel-of-2^t profile of the quotient, from the element sets
    auto dbl = [&](Vec v) {
      for (auto &x : v)
        x = (2 * x) & mask;
      return v;
    };
    for (int t = 0; t <= e; ++t) {
      std::uint64_t count = 0;
      for (auto v : sa) {
        for (int s = 0; s < t; ++s)
          v = dbl(v);
        if (sb.count(v))
          ++count;
      }
      std::uint64_t expected = 1;
      for (auto dv : q.divisors)
        expected *= std::min<std::uint64_t>(dv, std::uint64_t{1} << t);
      CHECK(count == sb.size() * expected);
    }
  }
}

TEST_CASE("fixed point shapes")
{
  // trivial action fixes everything
  CHECK(h0(trivial_group_action({2})) == AbelianGroupShape{{4}});
  CHECK(h0(trivial_group_action({1, 3})) == AbelianGroupShape{{2, 8}});

  // inversion on Z/4 fixes {0, 2}
  FiniteAction inv4 = cyclic_action(2, {2}, scalar_matrix(1, 3));
  CHECK(h0(inv4) == AbelianGroupShape{{2}});

  // coordinate swap on (Z/2)^2 fixes the diagonal
  FiniteAction swap2 = cyclic_action(2, {1, 1}, perm_matrix({1, 0}));
  CHECK(h0(swap2) == AbelianGroupShape{{2}});

  // coordinate swap on (Z/4)^2 fixes the diagonal Z/4
  FiniteAction swap4 = cyclic_action(2, {2, 2}, perm_matrix({1, 0}));
  CHECK(h0(swap4) == AbelianGroupShape{{4}});

  // inversion on Z/8 + Z/2: fixed points {0,4} + Z/2
  FiniteAction inv81 = cyclic_action(2, {3, 1}, scalar_matrix(2, 7));
  CHECK(h0(inv81) == AbelianGroupShape{{2, 2}});
}

TEST_CASE("first cohomology of small actions")
{
  // the regular representation has trivial H^1
  CHECK(h1(regular_translation_action(1)).is_trivial());

  // trivial group: every module has trivial H^1
  CHECK(h1(trivial_group_action({1})).is_trivial());
  CHECK(h1(trivial_group_action({3})).is_trivial());
  CHECK(h1(trivial_group_action({2, 1, 4})).is_trivial());

  // inversion on Z/4: H^1 = ker(N)/im(sigma-1) = (Z/4)/(2 Z/4) = Z/2
  FiniteAction inv4 = cyclic_action(2, {2}, scalar_matrix(1, 3));
  CHECK(h1(inv4) == AbelianGroupShape{{2}});

  // trivial Z/2-action on Z/2: H^1 = Hom(Z/2, Z/2) = Z/2
  FiniteAction triv2 = cyclic_action(2, {1}, scalar_matrix(1, 1));
  CHECK(h1(triv2) == AbelianGroupShape{{2}});
}

TEST_CASE("the cyclic-group oracle")
{
  // Z/2 trivial on Z/2
  {
    auto c = h_cyclic(2, ModuleShape({1}), scalar_matrix(1, 1));
    CHECK(c.h0 == AbelianGroupShape{{2}});
    CHECK(c.h1 == AbelianGroupShape{{2}});
    CHECK(c.h2 == AbelianGroupShape{{2}});
  }

  // Z/2 inversion on Z/2^m: H^1 = Z/2 at every truncation level
  for (int m = 1; m <= 8; ++m) {
    auto c = h_cyclic(2, ModuleShape({m}),
                      scalar_matrix(1, (std::uint32_t{1} << m) - 1));
    CHECK(c.h0 == AbelianGroupShape{{2}});
    CHECK(c.h1 == AbelianGroupShape{{2}});
    CHECK(c.h2 == AbelianGroupShape{{2}});
  }

  // Z/2 regular on (Z/2)^2: trivial H^1
  {
    auto c = h_cyclic(2, ModuleShape({1, 1}), perm_matrix({1, 0}));
    CHECK(c.h0 == AbelianGroupShape{{2}});
    CHECK(c.h1.is_trivial());
  }

  // the generator action must power to the identity
  CHECK_THROWS_AS(h_cyclic(3, ModuleShape({2}), scalar_matrix(1, 3)),
                  std::invalid_argument);
  // ... but acting through a proper quotient of Z/k is fine
  auto through_quotient = h_cyclic(4, ModuleShape({2}), scalar_matrix(1, 3));
  CHECK(through_quotient.h1 == AbelianGroupShape{{2}});
}

TEST_CASE("the cocycle solver agrees with the cyclic oracle")
{
  SECTION("every automorphism of small modules")
  {
    std::vector<std::vector<int>> shapes = {{1},      {2},    {1, 1}, {2, 1},
                                            {2, 2},   {4},    {3, 1}, {1, 1, 1},
                                            {3, 2}};
    std::vector<std::size_t> expected_counts = {1, 2, 6, 8, 96, 8, 16, 168, 0};
    for (std::size_t si = 0; si < shapes.size(); ++si) {
      ModuleShape mod(shapes[si]);
      auto autos = all_automorphisms(mod);
      if (expected_counts[si] != 0)
        CHECK(autos.size() == expected_counts[si]);
      for (const auto &sigma : autos) {
        int k = matrix_order(mod, sigma);
        auto oracle = h_cyclic(k, mod, sigma);
        FiniteAction act = cyclic_action(k, shapes[si], sigma);
        CHECK(static_cast<int>(act.group_order()) == k);
        CHECK(h0(act) == oracle.h0);
        CHECK(h1(act) == oracle.h1);
        // Herbrand quotient of a finite module is 1: |H^1| = |H^2|
        CHECK(oracle.h1.order() == oracle.h2.order());
      }
    }
  }

  SECTION("structured units on large cyclic modules")
  {
    for (int m = 7; m <= 10; ++m) {
      std::uint32_t mod = std::uint32_t{1} << m;
      for (std::uint32_t u : {mod - 1, (mod >> 1) - 1, (mod >> 1) + 1}) {
        ActionMatrix sigma = scalar_matrix(1, u);
        ModuleShape ms({m});
        int k = matrix_order(ms, sigma);
        CHECK(k == 2);
        auto oracle = h_cyclic(k, ms, sigma);
        FiniteAction act = cyclic_action(k, {m}, sigma);
        CHECK(h0(act) == oracle.h0);
        CHECK(h1(act) == oracle.h1);
        CHECK(oracle.h1.order() == oracle.h2.order());
      }
    }
  }

  SECTION("multiplication by 3 generates larger cyclic groups")
  {
    for (int m : {7, 8}) {
      ModuleShape ms({m});
      ActionMatrix sigma = scalar_matrix(1, 3);
      int k = matrix_order(ms, sigma);
      CHECK(k == (1 << (m - 2)));
      auto oracle = h_cyclic(k, ms, sigma);
      FiniteAction act = cyclic_action(k, {m}, sigma);
      CHECK(h0(act) == oracle.h0);
      CHECK(h1(act) == oracle.h1);
    }
  }

  SECTION("a unipotent action on (Z/32)^2 at the module-size cap")
  {
    ModuleShape ms({5, 5});
    ActionMatrix sigma = {{1, 1}, {0, 1}};
    int k = matrix_order(ms, sigma);
    CHECK(k == 32);
    auto oracle = h_cyclic(k, ms, sigma);
    FiniteAction act = cyclic_action(k, {5, 5}, sigma);
    CHECK(h0(act) == oracle.h0);
    CHECK(h1(act) == oracle.h1);
    CHECK(oracle.h1.order() == oracle.h2.order());
  }

  SECTION("a rotation of order four on (Z/4)^2")
  {
    ModuleShape ms({2, 2});
    ActionMatrix sigma = {{0, 3}, {1, 0}};
    int k = matrix_order(ms, sigma);
    CHECK(k == 4);
    auto oracle = h_cyclic(k, ms, sigma);
    FiniteAction act = cyclic_action(k, {2, 2}, sigma);
    CHECK(h0(act) == oracle.h0);
    CHECK(h1(act) == oracle.h1);
  }
}

TEST_CASE("regular translation actions have trivial first cohomology")
{
  for (int k = 0; k <= 3; ++k) {
    FiniteAction act = regular_translation_action(k);
    CHECK(act.group_order() == (std::size_t{1} << k));
    CHECK(h0(act) == AbelianGroupShape{{2}}); // the diagonal
    CHECK(h1(act).is_trivial());
  }
}

TEST_CASE("shapiro reduction")
{
  SECTION("point blocks reduce the regular representation to nothing")
  {
    for (int k = 1; k <= 3; ++k) {
      FiniteAction act = regular_translation_action(k);
      FiniteAction red = shapiro_reduce(act, point_blocks(1 << k));
      CHECK(red.group_order() == 1);
      CHECK(red.module().dims() == 1);
      CHECK(h1(red).is_trivial());
      CHECK(h1(red) == h1(act));
    }
  }

  SECTION("one block is the identity reduction")
  {
    FiniteAction act = regular_translation_action(2);
    FiniteAction red = shapiro_reduce(act, {{0, 1, 2, 3}});
    CHECK(red.group_order() == act.group_order());
    CHECK(red.module() == act.module());
    CHECK(h1(red) == h1(act));
  }

  SECTION("wreath translation actions")
  {
    struct Case {
      int k, r;
    };
    for (Case c : {Case{1, 1}, Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{3, 2}}) {
      FiniteAction act = wreath_translation_action(c.k, c.r);
      std::size_t inner = std::size_t{1} << (c.k - c.r);
      std::size_t blocks = std::size_t{1} << c.r;
      std::size_t order = 1;
      for (std::size_t b = 0; b < blocks; ++b)
        order *= inner;
      order *= blocks;
      CHECK(act.group_order() == order);

      FiniteAction red =
          shapiro_reduce(act, sized_blocks(1 << c.k, 1 << (c.k - c.r)));
      CHECK(red.group_order() == order / blocks);
      CHECK(red.module().dims() == static_cast<int>(inner));
      CHECK(h1(red) == h1(act));
      CHECK(h0(red) == AbelianGroupShape{{2}});
    }
  }

  SECTION("a reduction with nontrivial cohomology")
  {
    // Klein group: a swaps the two Z/4 summands, b negates both
    std::vector<std::uint16_t> pa = {1, 0, 2, 3};
    std::vector<std::uint16_t> pb = {0, 1, 3, 2};
    ActionMatrix ma = {{0, 1}, {1, 0}};
    ActionMatrix mb = {{3, 0}, {0, 3}};
    FiniteAction act(4, {pa, pb}, {ma, mb}, ModuleShape({2, 2}));
    CHECK(act.group_order() == 4);

    FiniteAction red = shapiro_reduce(act, point_blocks(2));
    CHECK(red.group_order() == 2);
    CHECK(h1(red) == AbelianGroupShape{{2}});
    CHECK(h1(act) == AbelianGroupShape{{2}});
    CHECK(h1(act) == h1(red));
  }

  SECTION("violated preconditions are reported")
  {
    // a trivial group does not move two blocks transitively
    CHECK_THROWS_AS(
        shapiro_reduce(trivial_group_action({1, 1}), point_blocks(2)),
        std::invalid_argument);

    // a shear mixes the two point blocks
    FiniteAction shear = cyclic_action(2, {1, 1}, ActionMatrix{{1, 1}, {0, 1}});
    CHECK_THROWS_AS(shapiro_reduce(shear, point_blocks(2)),
                    std::invalid_argument);

    // bad partitions
    FiniteAction act = regular_translation_action(1);
    CHECK_THROWS_AS(shapiro_reduce(act, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(shapiro_reduce(act, {{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(shapiro_reduce(act, {}), std::invalid_argument);
    CHECK_THROWS_AS(shapiro_reduce(act, {{0}, {}}), std::invalid_argument);
  }
}

TEST_CASE("the inversion action is not cohomologically trivial")
{
  // negation on (Z/2^m)^{2^k} has H^1 = (Z/2)^{2^k} at every truncation
  // level m; the value is stable in m and never vanishes
  for (int k = 0; k <= 3; ++k) {
    int d = 1 << k;
    AbelianGroupShape first;
    for (int m = 1; m * d <= 24 && m <= 4; ++m) {
      std::uint32_t neg = (std::uint32_t{1} << m) - 1;
      FiniteAction act =
          cyclic_action(2, std::vector<int>(d, m), scalar_matrix(d, neg));
      AbelianGroupShape value = h1(act);
      CHECK(value == AbelianGroupShape::homocyclic(d, 1));
      CHECK_FALSE(value.is_trivial());
      if (m == 1)
        first = value;
      CHECK(value == first);

      if (m * d <= 12) { // enumeration cap of the oracle
        auto oracle = h_cyclic(2, ModuleShape(std::vector<int>(d, m)),
                               scalar_matrix(d, neg));
        CHECK(oracle.h1 == value);
      }
    }
  }
}

TEST_CASE("isomorphic actions give equal shapes")
{
  // conjugating the module basis must not change any cohomology shape
  ModuleShape ms({3, 3});
  ActionMatrix sigma = {{0, 7}, {1, 0}};
  FiniteAction base = cyclic_action(4, {3, 3}, sigma);

  // by the coordinate swap
  ActionMatrix swapped = {{0, 1}, {7, 0}};
  FiniteAction conj_swap = cyclic_action(4, {3, 3}, swapped);
  CHECK(h0(conj_swap) == h0(base));
  CHECK(h1(conj_swap) == h1(base));

  // by the unit 3 on the first coordinate: U sigma U^{-1} with U = diag(3,1)
  ActionMatrix unit_conj = {{0, 7 * 3 % 8}, {3, 0}};
  FiniteAction conj_unit = cyclic_action(4, {3, 3}, unit_conj);
  CHECK(h0(conj_unit) == h0(base));
  CHECK(h1(conj_unit) == h1(base));

  // a wreath action conjugated by relabeling coordinates inside block 1
  FiniteAction w = wreath_translation_action(2, 1);
  std::vector<std::uint16_t> relabel = {0, 1, 3, 2};
  std::vector<std::vector<std::uint16_t>> gens;
  std::vector<ActionMatrix> mats;
  for (std::size_t g : w.generator_indices()) {
    gens.push_back(w.element_perm(g));
    const ActionMatrix &a = w.matrix(g);
    ActionMatrix b(4, std::vector<std::uint32_t>(4, 0));
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        b[relabel[j]][relabel[i]] = a[j][i];
    mats.push_back(std::move(b));
  }
  FiniteAction wc(w.degree(), gens, mats, w.module());
  CHECK(h0(wc) == h0(w));
  CHECK(h1(wc) == h1(w));
}

TEST_CASE("finite action plumbing")
{
  SECTION("text round trip")
  {
    FiniteAction act = cyclic_action(2, {2, 1}, ActionMatrix{{3, 0}, {0, 1}});
    std::string text = act.str();
    FiniteAction back = FiniteAction::parse(text);
    CHECK(back.group_order() == act.group_order());
    CHECK(back.module() == act.module());
    CHECK(back.str() == text);
    CHECK(h1(back) == h1(act));
  }

  SECTION("a documented example parses")
  {
    std::string text = "# swap action on Z/2 + Z/2\n"
                       "module: 2 2\n"
                       "degree: 2\n"
                       "gen: 2 1\n"
                       "mat: 0 1 / 1 0\n";
    FiniteAction act = FiniteAction::parse(text);
    CHECK(act.group_order() == 2);
    CHECK(h0(act) == AbelianGroupShape{{2}});
    CHECK(h1(act).is_trivial());
  }

  SECTION("negative matrix entries reduce correctly")
  {
    std::string text = "module: 8\ngen: 2 1\nmat: -1\n";
    FiniteAction act = FiniteAction::parse(text);
    CHECK(h1(act) == AbelianGroupShape{{2}});
  }

  SECTION("parse errors carry line numbers")
  {
    CHECK_THROWS_AS(FiniteAction::parse("module: 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAction::parse("gen: 2 1\nmat: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteAction::parse("module: 2\ngen: 2 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteAction::parse("module: 2\nmat: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteAction::parse("module: 2\nbogus: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        FiniteAction::parse("module: 2\ngen: 2 1\nmat: 1 1 / 1 1\n"),
        std::invalid_argument);
    try {
      FiniteAction::parse("module: 2\n"
                          "gen: 2 1\n"
                          "mat: zz\n");
      FAIL("expected a parse error");
    } catch (const std::invalid_argument &err) {
      CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }
  }

  SECTION("matrices must satisfy the group law")
  {
    // the swap has order 2 but multiplication by 3 has order 4 mod 16
    std::vector<std::uint16_t> swap01 = {1, 0};
    CHECK_THROWS_AS(
        FiniteAction(2, {swap01}, {scalar_matrix(1, 3)}, ModuleShape({4})),
        std::invalid_argument);
    // same permutation twice with two different matrices
    CHECK_THROWS_AS(FiniteAction(2, {swap01, swap01},
                                 {scalar_matrix(1, 3), scalar_matrix(1, 5)},
                                 ModuleShape({3})),
                    std::invalid_argument);
  }

  SECTION("matrices must respect the summand orders")
  {
    // an odd entry cannot map the order-2 summand into Z/4
    CHECK_THROWS_AS(cyclic_action(2, {2, 1}, ActionMatrix{{1, 1}, {0, 1}}),
                    std::invalid_argument);
  }

  SECTION("group order cap")
  {
    // (Z/2)^10 as translations of 1024 points exceeds the cap of 512
    std::vector<std::vector<std::uint16_t>> gens;
    std::vector<ActionMatrix> mats;
    for (int r = 0; r < 10; ++r) {
      std::vector<std::uint16_t> p(1024);
      for (int s = 0; s < 1024; ++s)
        p[s] = static_cast<std::uint16_t>(s ^ (1 << r));
      gens.push_back(p);
      mats.push_back(scalar_matrix(1, 1));
    }
    CHECK_THROWS_AS(FiniteAction(1024, gens, mats, ModuleShape({1})),
                    std::invalid_argument);
  }
}
