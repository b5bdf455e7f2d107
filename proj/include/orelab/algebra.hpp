#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orelab/linalg.hpp"
#include "orelab/scalar.hpp"

namespace orelab {

using AlgElem = Vec;  // coordinate vector over the algebra basis

/// A finite-dimensional unital algebra over an exact base, given by
/// structure constants e_i * e_j = sum_k c[i][j][k] e_k. Associativity is
/// not assumed.
class Algebra {
 public:
  Algebra(BaseRing base, std::size_t dim, std::vector<Scalar> structure_constants,
          AlgElem unit, std::vector<std::string> basis_names = {});

  const BaseRing& base() const { return base_; }
  std::size_t dim() const { return dim_; }
  std::int64_t characteristic() const { return base_.characteristic(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  AlgElem zero() const { return zero_vec(base_, dim_); }
  AlgElem unit() const { return unit_; }
  AlgElem basis_elem(std::size_t i) const;

  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem sub(const AlgElem& a, const AlgElem& b) const;
  AlgElem neg(const AlgElem& a) const;
  AlgElem scale(const Scalar& c, const AlgElem& a) const;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const;

  AlgElem commutator(const AlgElem& a, const AlgElem& b) const;
  AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c) const;

  bool is_zero(const AlgElem& a) const { return vec_is_zero(a); }
  bool is_unit_elem(const AlgElem& a) const { return a == unit_; }
  /// a = lambda * 1? Returns the scalar if so.
  std::optional<Scalar> as_scalar_multiple_of_unit(const AlgElem& a) const;

  bool is_associative() const;
  bool is_commutative() const;

  /// Left multiplication operator L_a as a matrix.
  Mat left_mul_matrix(const AlgElem& a) const;
  Mat right_mul_matrix(const AlgElem& a) const;

  std::string elem_str(const AlgElem& a) const;
  AlgElem parse_elem(std::string_view text) const;

  void check_elem(const AlgElem& a) const;

 private:
  BaseRing base_;
  std::size_t dim_;
  std::vector<Scalar> sc_;
  AlgElem unit_;
  std::vector<std::string> names_;
};

/// A base-linear additive endomorphism of the algebra, as a matrix acting
/// on coordinate vectors.
struct AddMap {
  std::size_t dim = 0;
  BaseRing ring;
  std::vector<Scalar> m;  // row-major dim x dim

  AddMap() = default;
  AddMap(BaseRing r, std::size_t d)
      : dim(d), ring(r), m(d * d, zero_of(r)) {}

  static AddMap identity(BaseRing r, std::size_t d);
  static AddMap zero(BaseRing r, std::size_t d) { return AddMap(r, d); }

  Scalar& at(std::size_t i, std::size_t j) { return m[i * dim + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return m[i * dim + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const AddMap&) const = default;
};

AlgElem map_apply(const AddMap& m, const AlgElem& r);
/// compose(f, g) = f after g (matrix product f*g).
AddMap compose(const AddMap& f, const AddMap& g);
AddMap map_add(const AddMap& f, const AddMap& g);
AddMap map_sub(const AddMap& f, const AddMap& g);
AddMap map_scale(const Scalar& c, const AddMap& f);
AddMap map_power(const AddMap& f, std::uint64_t n);

/// Powers m^0, m^1, ... until the next power repeats an earlier entry.
/// Over Q the list length is capped (orbit_bound_exceeded when exceeded).
std::vector<AddMap> map_power_orbit(const AddMap& m, std::size_t bound = 64);

/// Leibniz rule delta(rs) = delta(r)s + r delta(s) over all basis pairs.
bool is_derivation(const Algebra& alg, const AddMap& m);

enum class NucleusKind { left, middle, right, full };

/// Basis (field base) or generating set (Zn) of the named subspace.
std::vector<AlgElem> nucleus(const Algebra& alg, NucleusKind which);
std::vector<AlgElem> commuter(const Algebra& alg);
std::vector<AlgElem> center(const Algebra& alg);

/// Joint kernel of a family of maps (plus optional extra linear conditions
/// rows appended by the caller).
std::vector<AlgElem> joint_kernel(const Algebra& alg, const std::vector<AddMap>& maps);

/// Appends the linear conditions defining Z(R) (commutators and all three
/// associator slots against basis elements) to sys.
void append_center_conditions(const Algebra& alg, Mat& sys);
/// Appends the kernel conditions of the maps to sys.
void append_kernel_conditions(const Algebra& alg, const std::vector<AddMap>& maps,
                              Mat& sys);

}  // namespace orelab
