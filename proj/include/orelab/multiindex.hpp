#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "orelab/scalar.hpp"

namespace orelab {

/// An element of N^k: exponent vector of a fixed arity.
struct MultiIndex {
  std::vector<std::uint32_t> exps;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> e) : exps(std::move(e)) {}
  static MultiIndex zeros(std::size_t k) {
    return MultiIndex(std::vector<std::uint32_t>(k, 0));
  }
  static MultiIndex unit(std::size_t k, std::size_t i);

  std::size_t arity() const { return exps.size(); }
  std::uint64_t weight() const;
  bool is_zero() const;
  std::vector<std::size_t> support() const;

  bool operator==(const MultiIndex&) const = default;

  std::string str() const;  // "[2,0,1]"
  static MultiIndex parse(std::string_view text);
};

MultiIndex mi_add(const MultiIndex& f, const MultiIndex& g);
bool mi_le(const MultiIndex& f, const MultiIndex& g);  // pointwise f <= g
/// Pointwise f - g; requires g <= f (subtraction_underflow otherwise).
MultiIndex mi_sub(const MultiIndex& f, const MultiIndex& g);

/// Graded lexicographic comparison: weight first, then the largest
/// index at which the operands differ. Returns -1, 0 or 1.
int graded_lex_cmp(const MultiIndex& f, const MultiIndex& g);

/// Exact multi-binomial prod_i C(f_i, g_i) over Z (0 when g !<= f).
mpz_class multi_binom_z(const MultiIndex& f, const MultiIndex& g);
/// Same, reduced into the given base.
Scalar multi_binom(const MultiIndex& f, const MultiIndex& g, BaseRing ring);

/// (-1)^{|f|} in the given base.
Scalar parity_sign(const MultiIndex& f, BaseRing ring);

/// C(m, n) mod p via base-p digit products (Lucas); p must be prime.
std::int64_t lucas_binom_mod_p(std::uint64_t m, std::uint64_t n, std::int64_t p);

/// Natural number extended with -infinity, with p^(-inf) = 0.
struct ExtNat {
  bool neg_inf = true;
  std::uint32_t value = 0;

  static ExtNat minus_infinity() { return ExtNat{}; }
  static ExtNat of(std::uint32_t v) { return ExtNat{false, v}; }
};

/// Componentwise p^{t(i)}; p must be prime.
MultiIndex p_power_index(const std::vector<ExtNat>& t, std::int64_t p);

/// All multi-indices of the given arity with weight <= max_weight, in
/// ascending graded lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t arity,
                                            std::uint64_t max_weight);

}  // namespace orelab
