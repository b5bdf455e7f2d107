#pragma once

#include <map>
#include <optional>

#include "orelab/algebra.hpp"
#include "orelab/monoid.hpp"

namespace orelab {

/// A family Delta = {delta_i} of additive maps with delta_i(1) = 0, used to
/// generate a pi-structure over N^k.
struct DeltaFamily {
  Algebra algebra;
  std::vector<AddMap> deltas;

  DeltaFamily(Algebra alg, std::vector<AddMap> ds);
};

/// Intersection of the kernels of the family.
std::vector<AlgElem> r_delta(const DeltaFamily& family);
bool is_delta_commutative(const DeltaFamily& family);

/// delta^f = delta_1^{f(1)} o ... o delta_k^{f(k)} as a matrix.
AddMap delta_power(const std::vector<AddMap>& deltas, const MultiIndex& f,
                   BaseRing ring, std::size_t dim);

struct PiTableEntry {
  MonoidElem a, b;
  AddMap map;
};

struct PiKeyLess {
  bool operator()(const std::pair<MonoidElem, MonoidElem>& x,
                  const std::pair<MonoidElem, MonoidElem>& y) const {
    MonoidElemLess less;
    if (less(x.first, y.first)) return true;
    if (less(y.first, x.first)) return false;
    return less(x.second, y.second);
  }
};

using PiTable = std::map<std::pair<MonoidElem, MonoidElem>, AddMap, PiKeyLess>;

/// The family pi = {pi^a_b}: an explicit finitely-supported table (pairs
/// not listed default to delta_{a,b} * id), or the family generated from a
/// DeltaFamily by pi^f_g = C(f,g) delta^{f-g}.
class PiStructure {
 public:
  static PiStructure explicit_table(MonoidSpec monoid, BaseRing base,
                                    std::size_t dim,
                                    std::vector<PiTableEntry> entries);
  static PiStructure delta_generated(const DeltaFamily& family);

  bool is_delta_generated() const { return delta_generated_; }
  const std::vector<AddMap>& deltas() const { return deltas_; }
  const MonoidSpec& monoid() const { return monoid_; }
  const BaseRing& base() const { return base_; }
  std::size_t dim() const { return dim_; }

  AddMap lookup(const MonoidElem& a, const MonoidElem& b) const;

  /// Elements b for which pi^a_b may be nonzero, in deterministic order.
  std::vector<MonoidElem> support_of(const MonoidElem& a) const;

  const PiTable& table() const { return table_; }

 private:
  PiStructure() = default;

  MonoidSpec monoid_;
  BaseRing base_;
  std::size_t dim_ = 0;
  bool delta_generated_ = false;
  std::vector<AddMap> deltas_;
  PiTable table_;
};

enum class Axiom { d0, d1, d2, d3, d4, d5, d6, d7, d8 };
const char* axiom_name(Axiom a);

struct AxiomWitness {
  std::optional<MonoidElem> a, b, c;
  std::vector<AlgElem> operands;  // r (and s) where applicable
  std::string lhs, rhs;           // rendered values of the two sides
};

struct AxiomCheck {
  Axiom axiom = Axiom::d0;
  bool passed = true;
  bool exhaustive = true;  // false when quantifiers were weight-capped
  std::string note;
  std::optional<AxiomWitness> witness;
};

/// Exhaustive check of one axiom over the monoid range (weight-capped for
/// N^k) and all basis vectors.
AxiomCheck check_axiom(const Algebra& alg, const PiStructure& pi, Axiom which,
                       std::uint64_t weight_cap);

/// Re-evaluates a recorded failure witness; true when it still fails.
bool reverify_witness(const Algebra& alg, const PiStructure& pi,
                      const AxiomCheck& check);

struct Classification {
  bool axiom_pass[9] = {false, false, false, false, false,
                        false, false, false, false};
  bool commutative = false;
  bool well_ordered = false;
  std::uint64_t weight_cap = 0;
  bool capped = false;  // true when checks ran on a weight-capped range

  bool d(int i) const { return axiom_pass[i]; }
  bool g_derivation() const {
    return d(0) && d(1) && d(2) && d(3) && d(4);
  }
  bool unital_g_derivation() const { return g_derivation() && d(6); }
  bool strong() const { return d(7) || d(8); }
  bool d_structure() const { return g_derivation() && d(5); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;  // D0..D8 in order
  AxiomCheck commutative;
  AxiomCheck well_ordered;
  Classification classification;
};

AxiomReport check_all_axioms(const Algebra& alg, const PiStructure& pi,
                             std::uint64_t weight_cap);

Classification classify(const Algebra& alg, const PiStructure& pi,
                        std::uint64_t weight_cap);

/// Basis (generating set over Zn) of R^G = { r : pi^a_b(r) = delta_{a,b} r }.
/// Exact for both table and delta-generated structures.
std::vector<AlgElem> fixed_subring(const Algebra& alg, const PiStructure& pi);

/// Checks delta^n(rs) = sum_k C(n,k) delta^{n-k}(r) delta^k(s) for all
/// basis pairs and n <= n_max.
bool leibniz_power_check(const Algebra& alg, const AddMap& delta,
                         std::uint64_t n_max);

/// Every delta_i left (right) linear over R_Delta.
bool delta_left_kernel_linear(const DeltaFamily& family);
bool delta_right_kernel_linear(const DeltaFamily& family);

}  // namespace orelab
