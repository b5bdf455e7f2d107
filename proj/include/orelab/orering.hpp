#pragma once

#include <cstdint>
#include <string>

#include "orelab/pistructure.hpp"

namespace orelab {

struct OreTerm {
  MonoidElem exp;
  AlgElem coeff;
};

/// Sparse element of S = R[G; pi]: finitely many terms r_a x^a, kept in
/// ascending m_cmp order with zero coefficients pruned.
class OreElem {
 public:
  OreElem() = default;
  const std::vector<OreTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  friend class OreRing;
  std::vector<OreTerm> terms_;
};

struct SFixedDescription {
  std::vector<AlgElem> rg_basis;  // R^G basis; S^G = sum_a R^G x^a
};

struct CenterResult {
  std::vector<OreElem> basis;
  bool exact = false;      // finite monoid: exact; N^k: within the cap only
  std::uint64_t cap = 0;
  bool filtered = false;   // a-posteriori pass removed spurious solutions
  std::string note;
};

/// The Ore monoid ring S = R[G; pi]. Construction verifies that the monoid
/// is a valid commutative monoid and that pi is a G-derivation (D0)-(D4)
/// within the configured weight cap.
class OreRing {
 public:
  static OreRing make(Algebra algebra, PiStructure pi,
                      std::uint64_t weight_cap = 4);

  const Algebra& algebra() const { return algebra_; }
  const PiStructure& pi() const { return pi_; }
  const MonoidSpec& monoid() const { return pi_.monoid(); }
  const Classification& classification() const { return cls_; }
  std::uint64_t weight_cap() const { return weight_cap_; }
  bool finite_monoid() const { return is_finite(monoid()); }

  OreElem zero() const { return OreElem{}; }
  OreElem one() const;
  OreElem monomial(const MonoidElem& exp, const AlgElem& coeff) const;
  OreElem embed(const AlgElem& r) const;
  OreElem x_power(const MonoidElem& a) const;
  OreElem from_terms(std::vector<OreTerm> terms) const;

  OreElem add(const OreElem& u, const OreElem& v) const;
  OreElem neg(const OreElem& u) const;
  OreElem sub(const OreElem& u, const OreElem& v) const;
  OreElem mul(const OreElem& u, const OreElem& v) const;
  OreElem scale(const Scalar& c, const OreElem& u) const;

  /// The extension pi~^a_b acting coefficientwise.
  OreElem extend_pi(const MonoidElem& a, const MonoidElem& b,
                    const OreElem& u) const;

  OreElem commutator(const OreElem& u, const OreElem& v) const;
  OreElem associator(const OreElem& u, const OreElem& v, const OreElem& w) const;

  bool equal(const OreElem& u, const OreElem& v) const;

  MonoidElem degree(const OreElem& u) const;  // zero_element on 0
  const AlgElem& leading_coeff(const OreElem& u) const;
  bool is_monic(const OreElem& u) const;
  bool is_constant(const OreElem& u) const;
  bool is_linear(const OreElem& u) const;  // N^k only

  SFixedDescription fixed_description() const;

  /// Basis of Z(S) restricted to supports within the cap (exact over a
  /// finite monoid). See CenterResult::note for the verification scope.
  CenterResult center(std::uint64_t cap) const;
  /// Basis of Z(S)^G within the cap.
  CenterResult zsg(std::uint64_t cap) const;

  /// sum over g <= f of (-1)^g C(f,g) x^{f-g} delta^g(r); contract:
  /// equals the formal element r x^f. Delta-generated rings only.
  OreElem right_expand(const AlgElem& r, const MultiIndex& f) const;

  /// b_g = sum over f >= g of C(f,g) a_f at exponent f-g. Delta-generated
  /// rings only; contributing coefficients must lie in R_Delta.
  OreElem center_shift(const OreElem& a, const MonoidElem& g) const;

  std::string to_string(const OreElem& u) const;
  OreElem parse(std::string_view text) const;

  /// Coordinate bridge for linear algebra over S (finite monoid: all of
  /// G; N^k: monomials of weight <= cap).
  std::vector<MonoidElem> coord_monomials(std::uint64_t cap) const;
  Vec to_coords(const OreElem& u, const std::vector<MonoidElem>& monos) const;
  OreElem from_coords(const Vec& v, const std::vector<MonoidElem>& monos) const;

 private:
  OreRing(Algebra algebra, PiStructure pi, Classification cls,
          std::uint64_t weight_cap)
      : algebra_(std::move(algebra)), pi_(std::move(pi)), cls_(cls),
        weight_cap_(weight_cap) {}

  CenterResult center_impl(std::uint64_t cap, bool restrict_to_sg) const;
  CenterResult center_impl_zn(std::uint64_t cap, bool restrict_to_sg) const;

  Algebra algebra_;
  PiStructure pi_;
  Classification cls_;
  std::uint64_t weight_cap_;
};

}  // namespace orelab
