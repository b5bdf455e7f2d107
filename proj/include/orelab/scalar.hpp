#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "orelab/errors.hpp"

namespace orelab {

enum class BaseKind { fp, zn, rational };

bool is_prime(std::int64_t n);

/// The base scalar domain: a prime field F_p, the modular ring Z_n, or Q.
struct BaseRing {
  BaseKind kind = BaseKind::rational;
  std::int64_t modulus = 0;  // 0 for Q

  static BaseRing fp(std::int64_t p);
  static BaseRing zn(std::int64_t n);
  static BaseRing rationals() { return BaseRing{BaseKind::rational, 0}; }

  /// Parses a base tag: "Fp:5", "Zn:4" or "Q".
  static BaseRing parse(std::string_view tag);
  std::string tag() const;

  bool is_field() const { return kind != BaseKind::zn; }
  std::int64_t characteristic() const {
    return kind == BaseKind::rational ? 0 : modulus;
  }

  bool operator==(const BaseRing&) const = default;
};

/// An exact scalar in a fixed BaseRing. Residues are kept reduced into
/// [0, modulus); rationals are kept canonical with positive denominator.
class Scalar {
 public:
  Scalar() : ring_(BaseRing::rationals()) {}
  explicit Scalar(BaseRing ring) : ring_(ring) {}

  static Scalar from_int(BaseRing ring, std::int64_t v);
  static Scalar from_mpz(BaseRing ring, const mpz_class& v);
  static Scalar from_mpq(const mpq_class& q);
  /// Parses "num", "-num" or "num/den" (the latter only over Q).
  static Scalar parse(BaseRing ring, std::string_view text);

  const BaseRing& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_invertible() const;
  Scalar inverse() const;  // not_invertible on failure

  /// Residue value for Fp/Zn bases.
  std::int64_t residue() const { return rep_; }
  const mpq_class& rational() const { return q_; }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  BaseRing ring_;
  std::int64_t rep_ = 0;  // Fp / Zn payload
  mpq_class q_;           // Q payload
};

inline Scalar zero_of(BaseRing ring) { return Scalar(ring); }
inline Scalar one_of(BaseRing ring) { return Scalar::from_int(ring, 1); }

}  // namespace orelab
