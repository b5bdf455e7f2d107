#include "doctest.h"
#include "fixtures.hpp"

using namespace orelab;
namespace fx = orelab::fixtures;

namespace {
MonoidElem me(std::size_t i) { return MonoidElem{i}; }
MonoidElem me(std::initializer_list<std::uint32_t> e) {
  return MonoidElem{MultiIndex(std::vector<std::uint32_t>(e))};
}

bool axiom_passes(const Algebra& alg, const PiStructure& pi, Axiom a,
                  std::uint64_t cap = 4) {
  return check_axiom(alg, pi, a, cap).passed;
}
}  // namespace

TEST_CASE("delta family validation") {
  Algebra qy3 = fx::truncated_poly(BaseRing::rationals(), 3);
  CHECK_NOTHROW(DeltaFamily(qy3, {fx::ddy(qy3)}));
  AddMap bad = AddMap::zero(qy3.base(), 3);
  bad.at(1, 0) = one_of(qy3.base());  // sends 1 to y
  CHECK_THROWS_AS(DeltaFamily(qy3, {bad}), Error);
}

TEST_CASE("pi lookup for delta-generated structures") {
  Algebra qy3 = fx::truncated_poly(BaseRing::rationals(), 3);
  PiStructure pi = fx::delta_pi(qy3, {fx::ddy(qy3)});
  // pi^2_1 = C(2,1) delta = 2 delta
  AddMap got = pi.lookup(me({2}), me({1}));
  CHECK(got == map_scale(Scalar::from_int(qy3.base(), 2), fx::ddy(qy3)));
  // pi^f_f = id
  for (std::uint32_t f = 0; f <= 4; ++f)
    CHECK(pi.lookup(me({f}), me({f})).is_identity());
  // g !<= f gives the zero map
  Algebra f3uv = fx::f3uv();
  PiStructure pi2 = fx::delta_pi(f3uv, {fx::du_f3uv(f3uv), fx::dv_f3uv(f3uv)});
  CHECK(pi2.lookup(me({1, 0}), me({0, 1})).is_zero());
}

TEST_CASE("explicit table default rule") {
  Algebra f22 = fx::f2xf2();
  PiStructure pi = fx::cyclic2_pi(f22, fx::projection_sum(f22));
  CHECK(pi.lookup(me(0), me(0)).is_identity());
  CHECK(pi.lookup(me(1), me(1)).is_identity());
  CHECK(pi.lookup(me(0), me(1)).is_zero());
  CHECK(pi.lookup(me(1), me(0)) == fx::projection_sum(f22));
}

TEST_CASE("the cyclic2 structure passes D0-D4 and D6 but fails D5") {
  Algebra f22 = fx::f2xf2();
  PiStructure pi = fx::cyclic2_pi(f22, fx::projection_sum(f22));
  for (auto a : {Axiom::d0, Axiom::d1, Axiom::d2, Axiom::d3, Axiom::d4, Axiom::d6})
    CHECK(axiom_passes(f22, pi, a));
  AxiomCheck d5 = check_axiom(f22, pi, Axiom::d5, 4);
  CHECK_FALSE(d5.passed);
  REQUIRE(d5.witness.has_value());
  // first failing tuple in deterministic order: r = s = (1,0)
  CHECK(d5.witness->operands[0] == f22.basis_elem(0));
  CHECK(d5.witness->operands[1] == f22.basis_elem(0));
  CHECK(reverify_witness(f22, pi, d5));
  // D4 at (g,g,0) reduces to P o P = P.
  AddMap p = fx::projection_sum(f22);
  CHECK(compose(p, p) == p);
}

TEST_CASE("cyclic2 classification: strong unital well-ordered commutative non-D") {
  for (bool field_variant : {false, true}) {
    Algebra alg = field_variant ? fx::f4() : fx::f2xf2();
    AddMap p = field_variant ? fx::projection_w(alg) : fx::projection_sum(alg);
    PiStructure pi = fx::cyclic2_pi(alg, p);
    Classification cls = classify(alg, pi, 4);
    CHECK(cls.g_derivation());
    CHECK(cls.unital_g_derivation());
    CHECK(cls.d(7));
    CHECK(cls.d(8));
    CHECK(cls.strong());
    CHECK(cls.commutative);
    CHECK(cls.well_ordered);
    CHECK_FALSE(cls.d_structure());
    // R^G = F_2 * 1
    auto rg = fixed_subring(alg, pi);
    REQUIRE(rg.size() == 1);
    RowSpan span(alg.base(), alg.dim());
    span.insert(rg[0]);
    CHECK(span.contains(alg.unit()));
  }
}

TEST_CASE("delta-generated commuting derivations give a D-structure") {
  Algebra f5y5 = fx::truncated_poly(BaseRing::fp(5), 5);
  PiStructure pi = fx::delta_pi(f5y5, {fx::ddy(f5y5)});
  for (auto a : {Axiom::d0, Axiom::d1, Axiom::d2, Axiom::d3, Axiom::d4,
                 Axiom::d5, Axiom::d6})
    CHECK(axiom_passes(f5y5, pi, a));
  Classification cls = classify(f5y5, pi, 4);
  CHECK(cls.d_structure());
  CHECK(cls.well_ordered);
  CHECK(cls.commutative);
}

TEST_CASE("non-commuting deltas fail D4 with a concrete witness") {
  Algebra m2 = fx::m2_f3();
  // two non-commuting inner derivations ad(E12), ad(E21)
  auto ad = [&](std::size_t idx) {
    AlgElem a = m2.basis_elem(idx);
    Mat l = m2.left_mul_matrix(a), r = m2.right_mul_matrix(a);
    AddMap d(m2.base(), 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) d.at(i, j) = l.at(i, j) - r.at(i, j);
    return d;
  };
  AddMap d1 = ad(1), d2 = ad(2);
  CHECK_FALSE(compose(d1, d2) == compose(d2, d1));
  PiStructure pi = fx::delta_pi(m2, {d1, d2});
  AxiomCheck d4 = check_axiom(m2, pi, Axiom::d4, 2);
  CHECK_FALSE(d4.passed);
  REQUIRE(d4.witness.has_value());
  CHECK(reverify_witness(m2, pi, d4));
  Classification cls = classify(m2, pi, 2);
  CHECK_FALSE(cls.commutative);
  CHECK_FALSE(cls.g_derivation());
}

TEST_CASE("D1 holds for every accepted structure") {
  Algebra f22 = fx::f2xf2();
  for (const PiStructure& pi :
       {fx::cyclic2_pi(f22, fx::projection_sum(f22)), fx::untwisted_pi(f22)}) {
    CHECK(axiom_passes(f22, pi, Axiom::d1));
  }
  Algebra qy3 = fx::truncated_poly(BaseRing::rationals(), 3);
  CHECK(axiom_passes(qy3, fx::delta_pi(qy3, {fx::ddy(qy3)}), Axiom::d1));
}

TEST_CASE("fixed subring computations") {
  // cyclic2: R^G = ker P = F_2 (1,1)
  Algebra f22 = fx::f2xf2();
  auto rg = fixed_subring(f22, fx::cyclic2_pi(f22, fx::projection_sum(f22)));
  REQUIRE(rg.size() == 1);
  CHECK(rg[0] == f22.unit());

  // delta: R_Delta = ker(d/dy) = Q
  Algebra qy3 = fx::truncated_poly(BaseRing::rationals(), 3);
  auto rd = fixed_subring(qy3, fx::delta_pi(qy3, {fx::ddy(qy3)}));
  REQUIRE(rd.size() == 1);
  CHECK(rd[0] == qy3.unit());

  // all deltas zero: R^G = R
  auto rall = fixed_subring(qy3, fx::delta_pi(qy3, {AddMap::zero(qy3.base(), 3)}));
  CHECK(rall.size() == 3);

  // fixed_subring = r_delta exactly for delta-generated structures
  Algebra f3uv = fx::f3uv();
  DeltaFamily fam(f3uv, {fx::du_f3uv(f3uv), fx::dv_f3uv(f3uv)});
  auto via_pi = fixed_subring(f3uv, PiStructure::delta_generated(fam));
  auto via_kernel = r_delta(fam);
  CHECK(via_pi == via_kernel);
  REQUIRE(via_kernel.size() == 1);
  CHECK(via_kernel[0] == f3uv.unit());
  CHECK(is_delta_commutative(fam));
}

TEST_CASE("empty delta family fixes everything") {
  Algebra qy3 = fx::truncated_poly(BaseRing::rationals(), 3);
  DeltaFamily fam(qy3, {});
  CHECK(r_delta(fam).size() == 3);
  CHECK(is_delta_commutative(fam));
}

TEST_CASE("strong classification matches kernel-derivation linearity") {
  // D7/D8 for delta-generated pi vs. every delta left/right R_Delta-linear
  // (two independent routes).
  Algebra f3uv = fx::f3uv();
  DeltaFamily fam(f3uv, {fx::du_f3uv(f3uv), fx::dv_f3uv(f3uv)});
  PiStructure pi = PiStructure::delta_generated(fam);
  Classification cls = classify(f3uv, pi, 3);
  CHECK(cls.d(7) == delta_left_kernel_linear(fam));
  CHECK(cls.d(8) == delta_right_kernel_linear(fam));
  CHECK(cls.d(7));
  CHECK(cls.d(8));

  Algebra m2 = fx::m2_f3();
  AlgElem e12 = m2.basis_elem(1);
  Mat l = m2.left_mul_matrix(e12), r = m2.right_mul_matrix(e12);
  AddMap d(m2.base(), 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d.at(i, j) = l.at(i, j) - r.at(i, j);
  DeltaFamily fam2(m2, {d});
  PiStructure pi2 = PiStructure::delta_generated(fam2);
  Classification cls2 = classify(m2, pi2, 3);
  CHECK(cls2.d(7) == delta_left_kernel_linear(fam2));
  CHECK(cls2.d(8) == delta_right_kernel_linear(fam2));
}

TEST_CASE("well-ordered flag for delta-generated pi under graded lex") {
  Algebra f3uv = fx::f3uv();
  PiStructure pi = fx::delta_pi(f3uv, {fx::du_f3uv(f3uv), fx::dv_f3uv(f3uv)});
  Classification cls = classify(f3uv, pi, 3);
  CHECK(cls.well_ordered);
}

TEST_CASE("power Leibniz formula for genuine derivations") {
  // Euler derivation y d/dy on Q[y]/(y^4), n <= 6.
  Algebra qy4 = fx::truncated_poly(BaseRing::rationals(), 4);
  AddMap euler(qy4.base(), 4);
  for (std::size_t j = 1; j < 4; ++j)
    euler.at(j, j) = Scalar::from_int(qy4.base(), static_cast<std::int64_t>(j));
  REQUIRE(is_derivation(qy4, euler));
  CHECK(leibniz_power_check(qy4, euler, 6));

  // d/dy on F_5[y]/(y^5) is a derivation (char divides the truncation).
  Algebra f5y5 = fx::truncated_poly(BaseRing::fp(5), 5);
  REQUIRE(is_derivation(f5y5, fx::ddy(f5y5)));
  CHECK(leibniz_power_check(f5y5, fx::ddy(f5y5), 6));

  // n = 0 and n = 1 are the trivial and plain Leibniz cases.
  CHECK(leibniz_power_check(f5y5, fx::ddy(f5y5), 0));
  CHECK(leibniz_power_check(f5y5, fx::ddy(f5y5), 1));
}

TEST_CASE("corrupting any single materialized table entry breaks an axiom") {
  // Materialize the delta-generated pi over F_5[y]/(y^5) as an explicit
  // table for exponent pairs up to twice the check cap (entries beyond the
  // cap feed the D4/D5 boundary equations), then corrupt one matrix cell.
  // The acceptance suite runs the full sweep over every entry and cell.
  Algebra f5y5 = fx::truncated_poly(BaseRing::fp(5), 5);
  PiStructure delta = fx::delta_pi(f5y5, {fx::ddy(f5y5)});
  MonoidSpec n1 = FreeCommutative{1};
  const std::uint64_t cap = 2;
  std::vector<PiTableEntry> entries;
  for (auto& a : monoid_elements(n1, 2 * cap))
    for (auto& b : monoid_elements(n1, 2 * cap))
      entries.push_back({a, b, delta.lookup(a, b)});
  PiStructure table =
      PiStructure::explicit_table(n1, f5y5.base(), f5y5.dim(), entries);
  for (auto a : {Axiom::d1, Axiom::d2, Axiom::d4, Axiom::d5, Axiom::d6})
    CHECK(axiom_passes(f5y5, table, a, cap));

  for (std::size_t e = 0; e < entries.size(); ++e) {
    auto bad = entries;
    bad[e].map.at(2, 3) = bad[e].map.at(2, 3) + one_of(f5y5.base());
    PiStructure pi =
        PiStructure::explicit_table(n1, f5y5.base(), f5y5.dim(), bad);
    bool any_fail = false;
    for (auto a : {Axiom::d1, Axiom::d2, Axiom::d6, Axiom::d4, Axiom::d5}) {
      AxiomCheck c = check_axiom(f5y5, pi, a, cap);
      if (!c.passed) {
        any_fail = true;
        CHECK(reverify_witness(f5y5, pi, c));
        break;
      }
    }
    CHECK(any_fail);
  }
}
