#include "orelab/scalar.hpp"

#include <charconv>

namespace orelab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::unit_axiom_violation: return "UnitAxiomViolation";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::base_mismatch: return "BaseMismatch";
    case ErrorCode::subtraction_underflow: return "SubtractionUnderflow";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::orbit_bound_exceeded: return "OrbitBoundExceeded";
    case ErrorCode::unsupported_base: return "UnsupportedBase";
    case ErrorCode::wrong_characteristic: return "WrongCharacteristic";
    case ErrorCode::hypotheses_not_met: return "HypothesesNotMet";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::zero_element: return "ZeroElement";
    case ErrorCode::wrong_pi_kind: return "WrongPiKind";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::not_ore_ring: return "NotOreRing";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_monoid: return "InvalidMonoid";
    case ErrorCode::invalid_delta: return "InvalidDelta";
    case ErrorCode::internal: return "InternalError";
  }
  return "Error";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseRing BaseRing::fp(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  return BaseRing{BaseKind::fp, p};
}

BaseRing BaseRing::zn(std::int64_t n) {
  if (n < 2) fail(ErrorCode::parse_error, "Zn modulus must be >= 2");
  if (n > (std::int64_t{1} << 31))
    fail(ErrorCode::too_large, "modulus too large");
  return BaseRing{BaseKind::zn, n};
}

BaseRing BaseRing::parse(std::string_view tag) {
  if (tag == "Q") return rationals();
  auto parse_mod = [&](std::string_view body) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || p != body.data() + body.size())
      fail(ErrorCode::parse_error, "bad base tag '" + std::string(tag) + "'");
    return v;
  };
  if (tag.rfind("Fp:", 0) == 0) return fp(parse_mod(tag.substr(3)));
  if (tag.rfind("Zn:", 0) == 0) return zn(parse_mod(tag.substr(3)));
  fail(ErrorCode::parse_error, "bad base tag '" + std::string(tag) + "'");
}

std::string BaseRing::tag() const {
  switch (kind) {
    case BaseKind::fp: return "Fp:" + std::to_string(modulus);
    case BaseKind::zn: return "Zn:" + std::to_string(modulus);
    case BaseKind::rational: return "Q";
  }
  return "?";
}

namespace {

std::int64_t reduce_mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % m);
}

// Modular inverse via extended gcd; returns -1 if gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r; r = t;
    t = old_s - q * s;
    old_s = s; s = t;
  }
  if (old_r != 1 && old_r != -1) return -1;
  if (old_r == -1) old_s = -old_s;
  return reduce_mod(old_s, m);
}

}  // namespace

Scalar Scalar::from_int(BaseRing ring, std::int64_t v) {
  Scalar s(ring);
  if (ring.kind == BaseKind::rational) {
    s.q_ = v;
  } else {
    s.rep_ = reduce_mod(v, ring.modulus);
  }
  return s;
}

Scalar Scalar::from_mpz(BaseRing ring, const mpz_class& v) {
  Scalar s(ring);
  if (ring.kind == BaseKind::rational) {
    s.q_ = v;
  } else {
    mpz_class r;
    mpz_class m(static_cast<long>(ring.modulus));
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    s.rep_ = r.get_si();
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s(BaseRing::rationals());
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::parse(BaseRing ring, std::string_view text) {
  if (text.empty()) fail(ErrorCode::parse_error, "empty scalar");
  std::string t(text);
  auto slash = t.find('/');
  try {
    if (slash != std::string::npos) {
      if (ring.kind != BaseKind::rational)
        fail(ErrorCode::parse_error, "fractions only valid over Q: '" + t + "'");
      mpq_class q(t);
      q.canonicalize();
      if (q.get_den() == 0) fail(ErrorCode::parse_error, "zero denominator");
      return from_mpq(q);
    }
    mpz_class z(t);
    return from_mpz(ring, z);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::parse_error, "bad scalar '" + t + "'");
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    fail(ErrorCode::base_mismatch,
         "mixed scalar bases " + ring_.tag() + " and " + o.ring_.tag());
}

bool Scalar::is_zero() const {
  return ring_.kind == BaseKind::rational ? q_ == 0 : rep_ == 0;
}

bool Scalar::is_one() const {
  return ring_.kind == BaseKind::rational ? q_ == 1 : rep_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(ring_);
  if (ring_.kind == BaseKind::rational)
    s.q_ = q_ + o.q_;
  else
    s.rep_ = reduce_mod(rep_ + o.rep_, ring_.modulus);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(ring_);
  if (ring_.kind == BaseKind::rational)
    s.q_ = q_ - o.q_;
  else
    s.rep_ = reduce_mod(rep_ - o.rep_, ring_.modulus);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(ring_);
  if (ring_.kind == BaseKind::rational)
    s.q_ = q_ * o.q_;
  else
    s.rep_ = mul_mod(rep_, o.rep_, ring_.modulus);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(ring_);
  if (ring_.kind == BaseKind::rational)
    s.q_ = -q_;
  else
    s.rep_ = reduce_mod(-rep_, ring_.modulus);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(ring_ == o.ring_)) return false;
  return ring_.kind == BaseKind::rational ? q_ == o.q_ : rep_ == o.rep_;
}

bool Scalar::is_invertible() const {
  if (is_zero()) return false;
  if (ring_.kind == BaseKind::zn) return inv_mod(rep_, ring_.modulus) >= 0;
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::not_invertible, "zero scalar");
  Scalar s(ring_);
  if (ring_.kind == BaseKind::rational) {
    s.q_ = 1 / q_;
    return s;
  }
  std::int64_t inv = inv_mod(rep_, ring_.modulus);
  if (inv < 0)
    fail(ErrorCode::not_invertible,
         std::to_string(rep_) + " has no inverse mod " +
             std::to_string(ring_.modulus));
  s.rep_ = inv;
  return s;
}

std::string Scalar::str() const {
  if (ring_.kind != BaseKind::rational) return std::to_string(rep_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace orelab
