#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orelab/multiindex.hpp"

namespace orelab {

/// A finite commutative monoid given by its Cayley table, together with a
/// total order on the elements (identity first) serving as the well-order.
struct FiniteMonoid {
  std::size_t size = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> cayley;
  std::vector<std::size_t> order;  // elements listed in ascending order
  std::vector<std::string> names;  // optional display names
};

/// The free commutative monoid N^k under graded lexicographic order.
struct FreeCommutative {
  std::size_t arity = 0;
};

using MonoidSpec = std::variant<FiniteMonoid, FreeCommutative>;
using MonoidElem = std::variant<std::size_t, MultiIndex>;

bool is_finite(const MonoidSpec& spec);
std::size_t free_arity(const MonoidSpec& spec);

MonoidElem identity_elem(const MonoidSpec& spec);
bool is_identity(const MonoidSpec& spec, const MonoidElem& a);

MonoidElem m_op(const MonoidSpec& spec, const MonoidElem& a, const MonoidElem& b);

/// -1 / 0 / 1 under the spec's well-order (user order or graded lex).
int m_cmp(const MonoidSpec& spec, const MonoidElem& a, const MonoidElem& b);

/// All pairs (d, e) with de = c, in deterministic order.
std::vector<std::pair<MonoidElem, MonoidElem>> factorizations(
    const MonoidSpec& spec, const MonoidElem& c);

struct MonoidReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks identity, closure, associativity, commutativity and the order
/// permutation; all violations are reported rather than thrown.
MonoidReport validate(const MonoidSpec& spec);

/// Finite: all elements in ascending order. Free: weight <= cap, graded
/// lex ascending.
std::vector<MonoidElem> monoid_elements(const MonoidSpec& spec, std::uint64_t cap);

/// A generating set used for commutation checks: non-identity elements for
/// finite monoids, the unit vectors for N^k.
std::vector<MonoidElem> monoid_generators(const MonoidSpec& spec);

std::string elem_str(const MonoidSpec& spec, const MonoidElem& a);
MonoidElem parse_monoid_elem(const MonoidSpec& spec, std::string_view text);

/// Structural strict ordering usable as a map key (independent of m_cmp).
struct MonoidElemLess {
  bool operator()(const MonoidElem& a, const MonoidElem& b) const;
};

}  // namespace orelab
