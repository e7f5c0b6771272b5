#ifndef SPNALG_GROUP_CLOSURE_HPP
#define SPNALG_GROUP_CLOSURE_HPP

#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace spnalg {

struct ClosureCapExceeded : std::runtime_error {
  ClosureCapExceeded()
  : std::runtime_error("group closure exceeds element cap")
  {}
};

/** Dimino's incremental closure: enumerates the subgroup generated by `gens`
 * by extending one generator at a time and completing cosets of the previous
 * partial subgroup.  Returns elements in discovery order; callers sort into
 * their own canonical order.  Throws ClosureCapExceeded beyond `cap`.
 */
template <class Elem, class Hash>
std::vector<Elem> dimino_closure(const Elem &id, const std::vector<Elem> &gens,
                                 std::size_t cap = (1u << 20))
{
  std::vector<Elem> elements{id};
  std::unordered_set<Elem, Hash> seen{id};

  auto push = [&](const Elem &e) {
    if (!seen.insert(e).second)
      return false;
    if (seen.size() > cap)
      throw ClosureCapExceeded();
    elements.push_back(e);
    return true;
  };

  std::size_t level = 0; // generators consumed so far
  for (const auto &g : gens) {
    ++level;
    if (seen.count(g))
      continue;

    if (elements.size() == 1) {
      // first nontrivial generator: its cyclic group
      Elem cur = g;
      while (push(cur))
        cur = cur * g;
      continue;
    }

    std::size_t prev_order = elements.size();
    push(g);
    for (std::size_t j = 1; j < prev_order; ++j)
      push(elements[j] * g);

    // walk coset representatives; each new element spawns a full coset
    for (std::size_t rep_pos = prev_order; rep_pos < elements.size();
         rep_pos += prev_order) {
      for (std::size_t s = 0; s < level; ++s) {
        Elem elt = elements[rep_pos] * gens[s];
        if (push(elt)) {
          for (std::size_t j = 1; j < prev_order; ++j)
            push(elements[j] * elt);
        }
      }
    }
  }

  return elements;
}

/** Greedy minimal-ish generating set: scan `elements` in the given order and
 * keep those that enlarge the generated subgroup.  Deterministic; at most
 * log2(order) generators.
 */
template <class Elem, class Hash>
std::vector<Elem> minimal_generators(const Elem &id,
                                     const std::vector<Elem> &elements)
{
  std::vector<Elem> gens;
  std::unordered_set<Elem, Hash> closure{id};
  for (const Elem &e : elements) {
    if (closure.size() == elements.size())
      break;
    if (closure.count(e))
      continue;
    gens.push_back(e);
    auto closed =
        dimino_closure<Elem, Hash>(id, gens, elements.size() + 1);
    closure = std::unordered_set<Elem, Hash>(closed.begin(), closed.end());
  }
  return gens;
}

} // namespace spnalg

#endif // SPNALG_GROUP_CLOSURE_HPP
