#pragma once

#include "orelab/orering.hpp"

namespace orelab {

enum class Verdict { simple, not_simple, unknown };
const char* verdict_name(Verdict v);

enum class TriState { yes, no, unknown };

/// Echelonized basis of a subspace (an ideal witness, typically).
struct SubspaceBasis {
  std::vector<Vec> rows;
  std::size_t ambient_dim = 0;
};

struct SimplicityCaps {
  std::uint64_t weight_cap = 4;
  std::size_t orbit_bound = 64;
  std::uint64_t brute_cap = std::uint64_t{1} << 20;
  std::uint64_t witness_cap = 8;
};

/// Least subspace of R containing the generators, closed under two-sided
/// multiplication by R and (optionally) under the given additive maps.
/// Field bases only (unsupported_base over Zn).
SubspaceBasis ideal_closure(const Algebra& alg,
                            const std::vector<AlgElem>& generators,
                            const std::vector<AddMap>& invariant_maps,
                            bool invariant);

/// The invariance maps carried by a pi-structure: the deltas for a
/// delta-generated family, the listed table entries otherwise (the default
/// entries are 0 or id and never move a subspace).
std::vector<AddMap> invariance_maps(const PiStructure& pi);

/// Closure is everything: the ideal generated by each element is R.
bool closure_is_full(const Algebra& alg, const SubspaceBasis& basis);

struct GSimpleResult {
  TriState state = TriState::unknown;
  std::optional<SubspaceBasis> witness_ideal;  // proper invariant ideal
  std::optional<AlgElem> witness_generator;
  std::string note;
};

/// G-simplicity (Delta-simplicity) of the coefficient ring. Exhaustive
/// over finite bases; semi-decided over Q (see note).
GSimpleResult is_g_simple_coeffring(const Algebra& alg, const PiStructure& pi,
                                    const SimplicityCaps& caps = {});

/// Searches span(domain_basis) for c with target(r) = cr - rc.
std::optional<AlgElem> is_inner_from(const Algebra& alg, const AddMap& target,
                                     const std::vector<AlgElem>& domain_basis);

struct SimplicityReport {
  Verdict verdict = Verdict::unknown;
  std::optional<Verdict> g_verdict;  // brute force: G-invariant pass
  std::string method;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<std::string> notes;
  std::optional<SubspaceBasis> witness_ideal_r;
  std::optional<SubspaceBasis> witness_ideal_s;
  std::optional<OreElem> central_witness;
  std::optional<AlgElem> witness_generator;
  SimplicityCaps caps;
};

/// Simplicity of R[N^k; pi] over char-0 coefficients:
/// simple iff R is Delta-simple and no nontrivial F-linear combination of
/// the deltas is an inner derivation by an element of R_Delta.
SimplicityReport decide_simple_char0(const DeltaFamily& family,
                                     const SimplicityCaps& caps = {});

/// Char-p analogue over the maps delta_i^{p^j}.
SimplicityReport decide_simple_charp(const DeltaFamily& family,
                                     const SimplicityCaps& caps = {});

/// G-simplicity of S via "R G-simple and Z(S)^G a field". Requires the
/// strong/well-ordered hypotheses; delta-generated input delegates to the
/// char-0/char-p deciders. Throws hypotheses_not_met listing failures.
SimplicityReport decide_via_theorem_3_3(const Algebra& alg,
                                        const PiStructure& pi,
                                        const SimplicityCaps& caps = {});

/// Ground-truth oracle for finite S: plain simplicity (verdict) and
/// G-simplicity (g_verdict) by exhaustive ideal closures.
SimplicityReport decide_brute_force(const OreRing& ring,
                                    const SimplicityCaps& caps = {});

struct WitnessSearchResult {
  bool found = false;
  std::size_t rank = 0;  // dimension of the explored part of the ideal
  std::string note;
};

/// Semi-decision: closure of the two-sided ideal of s restricted to
/// supports of weight <= cap, looking for the exact element 1.
WitnessSearchResult witness_unit_in_ideal(const OreRing& ring, const OreElem& s,
                                          std::uint64_t degree_cap);

struct CenterStructure {
  bool found = false;
  OreElem least_central;
  std::string shape;  // "linear_plus_constant" | "p_power_supported" | "none"
  std::vector<std::string> anomalies;
};

/// Least non-constant monic central element within the cap and its shape
/// per the char-0 / char-p structure propositions.
CenterStructure center_structure_search(const OreRing& ring, std::uint64_t cap);

/// Fieldness of the span of basis (a commutative associative unital
/// subring). Exhaustive over finite bases; over Q decided structurally for
/// dimension 1 and answered unknown otherwise.
TriState is_field_span(const Algebra& alg, const std::vector<AlgElem>& basis,
                       std::string* note = nullptr);
TriState is_field_span_s(const OreRing& ring, const std::vector<OreElem>& basis,
                         std::string* note = nullptr);

/// Strategy dispatch with the verdict precedence brute > theorem > witness;
/// disagreements between applicable methods raise an internal error.
SimplicityReport decide_auto(const Algebra& alg, const PiStructure& pi,
                             const SimplicityCaps& caps,
                             const std::string& strategy);

/// Re-verification helpers for reported evidence.
bool verify_proper_invariant_ideal_r(const Algebra& alg, const PiStructure& pi,
                                     const SubspaceBasis& basis);
bool verify_central_element(const OreRing& ring, const OreElem& elem,
                            std::uint64_t cap);

}  // namespace orelab
