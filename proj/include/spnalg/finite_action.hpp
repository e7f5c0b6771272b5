#ifndef SPNALG_FINITE_ACTION_HPP
#define SPNALG_FINITE_ACTION_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/abelian2.hpp"

namespace spnalg {

/// Direct sum of cyclic 2-groups Z/2^{m_0} + ... + Z/2^{m_{d-1}}.
class ModuleShape {
public:
  explicit ModuleShape(std::vector<int> exps)
  : exps_(std::move(exps))
  {
    if (exps_.empty())
      throw std::invalid_argument("ModuleShape: empty divisor list");
    int total = 0;
    for (int m : exps_) {
      if (m < 1 || m > 24)
        throw std::invalid_argument("ModuleShape: divisor exponent out of range");
      total += m;
    }
    if (total > 24)
      throw std::invalid_argument("ModuleShape: module larger than 2^24");
  }

  int dims() const { return static_cast<int>(exps_.size()); }
  int exponent(int j) const { return exps_[j]; }
  std::uint32_t modulus(int j) const { return std::uint32_t{1} << exps_[j]; }

  int max_exponent() const
  {
    int e = 1;
    for (int m : exps_)
      e = std::max(e, m);
    return e;
  }

  std::uint64_t size() const
  {
    int total = 0;
    for (int m : exps_)
      total += m;
    return std::uint64_t{1} << total;
  }

  bool operator==(const ModuleShape &other) const = default;

  const std::vector<int> &exponents() const { return exps_; }

  std::string str() const
  {
    std::string res;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i > 0)
        res += " x ";
      res += "Z/" + std::to_string(std::uint32_t{1} << exps_[i]);
    }
    return res;
  }

private:
  std::vector<int> exps_;
};

/** Integer matrix acting on a ModuleShape: entry (j, i) maps the i-th
 * summand into the j-th and is stored reduced mod 2^{m_j}.
 */
using ActionMatrix = std::vector<std::vector<std::uint32_t>>;

namespace detail {

inline ActionMatrix reduce_matrix(const ModuleShape &mod, ActionMatrix a)
{
  int d = mod.dims();
  if (static_cast<int>(a.size()) != d)
    throw std::invalid_argument("action matrix has wrong row count");
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(a[j].size()) != d)
      throw std::invalid_argument("action matrix has wrong column count");
    for (int i = 0; i < d; ++i)
      a[j][i] &= mod.modulus(j) - 1;
  }
  return a;
}

/// a homomorphism must send the order-2^{m_i} generator into the 2^{m_i}-torsion
inline void check_matrix_well_defined(const ModuleShape &mod,
                                      const ActionMatrix &a)
{
  int d = mod.dims();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      int need = mod.exponent(j) - mod.exponent(i);
      if (need > 0 && (a[j][i] & ((std::uint32_t{1} << need) - 1)) != 0)
        throw std::invalid_argument(
            "action matrix entry does not respect the summand orders");
    }
}

inline ActionMatrix identity_matrix(const ModuleShape &mod)
{
  int d = mod.dims();
  ActionMatrix a(d, std::vector<std::uint32_t>(d, 0));
  for (int j = 0; j < d; ++j)
    a[j][j] = 1;
  return a;
}

inline ActionMatrix multiply_matrices(const ModuleShape &mod,
                                      const ActionMatrix &a,
                                      const ActionMatrix &b)
{
  int d = mod.dims();
  ActionMatrix c(d, std::vector<std::uint32_t>(d, 0));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      std::uint64_t sum = 0;
      for (int l = 0; l < d; ++l)
        sum += std::uint64_t{a[j][l]} * b[l][i];
      c[j][i] = static_cast<std::uint32_t>(sum & (mod.modulus(j) - 1));
    }
  return c;
}

} // namespace detail

/** A finite group given by an explicit element list (elements are
 * permutations of {0, ..., degree-1}) together with an action matrix per
 * element on a ModuleShape.  Construction closes the generators and verifies
 * that the matrices satisfy the group law, so every instance is a genuine
 * module structure.
 */
class FiniteAction {
public:
  static constexpr std::size_t group_cap = 512;

  FiniteAction(int degree,
               std::vector<std::vector<std::uint16_t>> generator_perms,
               std::vector<ActionMatrix> generator_mats, ModuleShape module)
  : module_(std::move(module)),
    degree_(degree),
    gen_count_(generator_perms.size())
  {
    if (degree_ < 1 || degree_ > 4096)
      throw std::invalid_argument("FiniteAction: degree out of range");
    if (generator_perms.size() != generator_mats.size())
      throw std::invalid_argument(
          "FiniteAction: generator and matrix counts differ");
    for (const auto &p : generator_perms)
      check_perm(p);
    for (auto &m : generator_mats) {
      m = detail::reduce_matrix(module_, std::move(m));
      detail::check_matrix_well_defined(module_, m);
    }

    std::vector<std::uint16_t> id(degree_);
    for (int i = 0; i < degree_; ++i)
      id[i] = static_cast<std::uint16_t>(i);
    elems_.push_back(id);
    mats_.push_back(detail::identity_matrix(module_));
    index_[id] = 0;

    // breadth-first closure under right multiplication, checking that a
    // rediscovered element always carries the same matrix
    for (std::size_t at = 0; at < elems_.size(); ++at) {
      for (std::size_t g = 0; g < generator_perms.size(); ++g) {
        auto p = compose(elems_[at], generator_perms[g]);
        auto m = detail::multiply_matrices(module_, mats_[at],
                                           generator_mats[g]);
        auto it = index_.find(p);
        if (it == index_.end()) {
          if (elems_.size() >= group_cap)
            throw std::invalid_argument(
                "FiniteAction: group order exceeds the cap of 512");
          index_[p] = elems_.size();
          elems_.push_back(std::move(p));
          mats_.push_back(std::move(m));
        } else if (mats_[it->second] != m) {
          throw std::invalid_argument(
              "FiniteAction: matrices do not satisfy the group law");
        }
      }
    }

    build_table();
    // generator index list (after closure so indices exist)
    for (const auto &p : generator_perms)
      gen_indices_.push_back(index_.at(p));
  }

  /// explicit element list (must be closed); used by shapiro_reduce
  static FiniteAction from_elements(
      int degree, const std::vector<std::vector<std::uint16_t>> &perms,
      const std::vector<ActionMatrix> &mats, ModuleShape module)
  {
    // feed the full list as generators: closure adds nothing new when the
    // list is closed, and the law check runs on every product
    FiniteAction a(degree, perms, mats, std::move(module));
    if (a.group_order() != perms.size() &&
        a.group_order() != perms.size() + 1) // list may omit the identity
      throw std::invalid_argument("FiniteAction: element list is not closed");
    return a;
  }

  const ModuleShape &module() const { return module_; }
  int degree() const { return degree_; }
  std::size_t group_order() const { return elems_.size(); }
  std::size_t identity_index() const { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const
  { return table_[a * elems_.size() + b]; }

  std::size_t inverse(std::size_t a) const
  {
    for (std::size_t b = 0; b < elems_.size(); ++b)
      if (multiply(a, b) == 0)
        return b;
    throw std::logic_error("FiniteAction: no inverse found");
  }

  const ActionMatrix &matrix(std::size_t idx) const { return mats_[idx]; }

  const std::vector<std::uint16_t> &element_perm(std::size_t idx) const
  { return elems_[idx]; }

  const std::vector<std::size_t> &generator_indices() const
  { return gen_indices_; }

  /** Text form:
   *    # comment
   *    module: 2 2 4
   *    degree: 4
   *    gen: 2 1 4 3
   *    mat: 0 1 / 1 0 / ...
   * Moduli are powers of two; permutations list 1-based images; matrix rows
   * are '/'-separated; each gen line is followed by its mat line.
   */
  static FiniteAction parse(const std::string &text)
  {
    std::vector<int> exps;
    int degree = -1;
    std::vector<std::vector<std::uint16_t>> perms;
    std::vector<ActionMatrix> mats;
    bool want_mat = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key))
        continue;
      if (key == "module:") {
        if (!exps.empty())
          parse_fail(lineno, "duplicate module line");
        long long v;
        while (ls >> v) {
          int e = 0;
          while (e <= 25 && (1LL << e) < v)
            ++e;
          if (v < 2 || (1LL << e) != v)
            parse_fail(lineno, "modulus is not a power of two (>= 2)");
          exps.push_back(e);
        }
        if (exps.empty())
          parse_fail(lineno, "empty module line");
      } else if (key == "degree:") {
        if (!(ls >> degree))
          parse_fail(lineno, "bad degree line");
      } else if (key == "gen:") {
        if (want_mat)
          parse_fail(lineno, "gen line without a mat line before it");
        std::vector<std::uint16_t> p;
        long long v;
        while (ls >> v) {
          if (v < 1 || v > 4096)
            parse_fail(lineno, "permutation image out of range");
          p.push_back(static_cast<std::uint16_t>(v - 1));
        }
        if (p.empty())
          parse_fail(lineno, "empty gen line");
        if (degree < 0)
          degree = static_cast<int>(p.size());
        if (static_cast<int>(p.size()) != degree)
          parse_fail(lineno, "permutation length differs from degree");
        perms.push_back(std::move(p));
        want_mat = true;
      } else if (key == "mat:") {
        if (!want_mat)
          parse_fail(lineno, "mat line without a preceding gen line");
        if (exps.empty())
          parse_fail(lineno, "mat line before the module line");
        int d = static_cast<int>(exps.size());
        ActionMatrix m;
        std::vector<std::uint32_t> row;
        std::string tok;
        while (ls >> tok) {
          if (tok == "/") {
            if (static_cast<int>(row.size()) != d)
              parse_fail(lineno, "matrix row has wrong length");
            m.push_back(std::move(row));
            row.clear();
          } else {
            long long v;
            try {
              std::size_t used = 0;
              v = std::stoll(tok, &used);
              if (used != tok.size())
                throw std::invalid_argument("");
            } catch (const std::exception &) {
              parse_fail(lineno, "bad matrix entry '" + tok + "'");
            }
            long long mod = 1LL << 24;
            row.push_back(static_cast<std::uint32_t>(((v % mod) + mod) % mod));
          }
        }
        if (static_cast<int>(row.size()) != d)
          parse_fail(lineno, "matrix row has wrong length");
        m.push_back(std::move(row));
        if (static_cast<int>(m.size()) != d)
          parse_fail(lineno, "matrix has wrong row count");
        mats.push_back(std::move(m));
        want_mat = false;
      } else {
        parse_fail(lineno, "unknown key '" + key + "'");
      }
    }
    if (exps.empty())
      parse_fail(lineno, "missing module line");
    if (want_mat)
      parse_fail(lineno, "gen line without a mat line");
    if (degree < 0)
      degree = 1; // trivial group
    return FiniteAction(degree, std::move(perms), std::move(mats),
                        ModuleShape(std::move(exps)));
  }

  std::string str() const
  {
    std::ostringstream out;
    out << "module:";
    for (int j = 0; j < module_.dims(); ++j)
      out << ' ' << module_.modulus(j);
    out << "\ndegree: " << degree_ << '\n';
    for (std::size_t g : gen_indices_) {
      out << "gen:";
      for (int x = 0; x < degree_; ++x)
        out << ' ' << elems_[g][x] + 1;
      out << "\nmat:";
      const auto &m = mats_[g];
      for (int j = 0; j < module_.dims(); ++j) {
        if (j > 0)
          out << " /";
        for (int i = 0; i < module_.dims(); ++i)
          out << ' ' << m[j][i];
      }
      out << '\n';
    }
    return out.str();
  }

private:
  [[noreturn]] static void parse_fail(int lineno, const std::string &why)
  {
    throw std::invalid_argument("FiniteAction parse error at line " +
                                std::to_string(lineno) + ": " + why);
  }

  void check_perm(const std::vector<std::uint16_t> &p) const
  {
    if (static_cast<int>(p.size()) != degree_)
      throw std::invalid_argument("FiniteAction: permutation has wrong length");
    std::vector<bool> seen(degree_, false);
    for (auto v : p) {
      if (v >= degree_ || seen[v])
        throw std::invalid_argument("FiniteAction: not a permutation");
      seen[v] = true;
    }
  }

  /// (a . b)(x) = a(b(x))
  std::vector<std::uint16_t> compose(const std::vector<std::uint16_t> &a,
                                     const std::vector<std::uint16_t> &b) const
  {
    std::vector<std::uint16_t> c(degree_);
    for (int x = 0; x < degree_; ++x)
      c[x] = a[b[x]];
    return c;
  }

  void build_table()
  {
    std::size_t n = elems_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] =
            static_cast<std::uint16_t>(index_.at(compose(elems_[a], elems_[b])));
  }

  ModuleShape module_;
  int degree_;
  std::size_t gen_count_;
  std::vector<std::vector<std::uint16_t>> elems_;
  std::vector<ActionMatrix> mats_;
  std::map<std::vector<std::uint16_t>, std::size_t> index_;
  std::vector<std::uint16_t> table_;
  std::vector<std::size_t> gen_indices_;
};

} // namespace spnalg

#endif // SPNALG_FINITE_ACTION_HPP
