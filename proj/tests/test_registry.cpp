#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "embz/errors.hpp"
#include "support.hpp"

using namespace embz;
using namespace embz::test;

namespace {

std::vector<Rational> ratios(std::initializer_list<long> r) {
  std::vector<Rational> v;
  for (long x : r) v.push_back(Rational(x));
  return v;
}

RadicalScalar sq(std::uint64_t m) { return RadicalScalar::sqrt_int(m); }
RadicalScalar rat(long p, long q = 1) { return RadicalScalar(make_rational(p, q)); }

}  // namespace

TEST_CASE("make_schmidt_from_ratios examples", "[registry]") {
  SchmidtVector b = make_schmidt_from_ratios(ratios({1, 1}));
  CHECK(b.width() == 1);
  CHECK(b.amplitudes() == std::vector<RadicalScalar>{rat(1, 2) * sq(2), rat(1, 2) * sq(2)});
  SchmidtVector t = make_schmidt_from_ratios(ratios({2, 1}));
  CHECK(t.amplitudes() == std::vector<RadicalScalar>{rat(1, 3) * sq(6), rat(1, 3) * sq(3)});
  CHECK(t.weight(0) == rat(2, 3));
  CHECK(t.weight(1) == rat(1, 3));
  SchmidtVector p = make_schmidt_from_ratios(ratios({9, 16}));
  CHECK(p.amplitudes() == std::vector<RadicalScalar>{rat(3, 5), rat(4, 5)});
  CHECK(p.norm_sq() == RadicalScalar(1));
}

TEST_CASE("construction errors", "[registry]") {
  CHECK_THROWS_AS(make_schmidt_from_ratios(ratios({1, 0})), NotEntangledError);
  CHECK_THROWS_AS(make_schmidt_from_ratios(ratios({0, 0, 0, 5})), NotEntangledError);
  CHECK_THROWS_AS(make_schmidt_from_ratios(ratios({1, 1, 1})), ShapeError);
  CHECK_THROWS_AS(make_schmidt_from_ratios(ratios({1})), ShapeError);
  CHECK_THROWS_AS(make_schmidt_from_ratios(ratios({1, -1})), DomainError);
  std::vector<RadicalScalar> complex_amp{RadicalScalar::i(), rat(1)};
  CHECK_THROWS_AS(SchmidtVector::from_amplitudes(complex_amp), DomainError);
  std::vector<RadicalScalar> negative{rat(1) - sq(2), rat(1)};
  CHECK_THROWS_AS(SchmidtVector::from_amplitudes(negative), DomainError);
}

TEST_CASE("squares sum to one for random ratio vectors", "[registry]") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(0, 50);
  for (int k = 0; k < 200; ++k) {
    const unsigned width = 1 + k % 3;
    std::vector<Rational> r(std::size_t{1} << width);
    for (auto& x : r) x = d(rng);
    r[0] += 1;
    r[1] += 1;
    SchmidtVector v = make_schmidt_from_ratios(r);
    RadicalScalar total;
    for (const auto& a : v.amplitudes()) total += a * a;
    REQUIRE(total == RadicalScalar(1));
    for (std::size_t i = 0; i < v.dimension(); ++i) {
      for (std::size_t j = 0; j < v.dimension(); ++j) {
        REQUIRE(v.pair_product(i, j) == v.amplitudes()[i] * v.amplitudes()[j]);
      }
    }
  }
}

TEST_CASE("canonical keys", "[registry]") {
  SchmidtVector b = make_schmidt_from_ratios(ratios({1, 1}));
  CHECK(canonical_key(b) == "q[1;1,1]");
  CHECK(canonical_key(make_schmidt_from_ratios(ratios({2, 2}))) == canonical_key(b));
  CHECK(make_schmidt_from_ratios(ratios({2, 2})) == b);
  CHECK(canonical_key(make_schmidt_from_ratios(ratios({4, 2, 2, 1}))) == "q[2;4,2,2,1]");
  std::vector<Rational> frac{make_rational(1, 2), make_rational(1, 3)};
  CHECK(canonical_key(make_schmidt_from_ratios(frac)) == "q[1;3,2]");
  // basis order is part of the register
  CHECK(canonical_key(make_schmidt_from_ratios(ratios({1, 2}))) != canonical_key(make_schmidt_from_ratios(ratios({2, 1}))));

  std::vector<RadicalScalar> amps{rat(1) + sq(2), rat(1)};
  SchmidtVector e = SchmidtVector::from_amplitudes(amps);
  CHECK(e.mode() == KeyMode::Exact);
  CHECK(canonical_key(e) == "qx[1;1,-1+(1)*sqrt(2)]");  // 1/(1+sqrt2) = sqrt2 - 1
  CHECK(canonical_key(e).rfind("qx[", 0) == 0);
  // scaling the amplitudes does not change the register
  std::vector<RadicalScalar> scaled{(rat(1) + sq(2)) * sq(3), sq(3)};
  CHECK(SchmidtVector::from_amplitudes(scaled) == e);
}

TEST_CASE("exact vectors with rational weights collapse to dense keys", "[registry]") {
  std::vector<RadicalScalar> amps{sq(2), sq(2)};
  SchmidtVector v = SchmidtVector::from_amplitudes(amps);
  CHECK(v.mode() == KeyMode::Dense);
  CHECK(v.key() == "q[1;1,1]");
  std::vector<RadicalScalar> amps2{rat(1), sq(2)};
  CHECK(SchmidtVector::from_amplitudes(amps2).key() == "q[1;1,2]");
  std::vector<RadicalScalar> amps3{rat(3), rat(4)};
  CHECK(SchmidtVector::from_amplitudes(amps3).key() == "q[1;9,16]");
}

TEST_CASE("exact vector pair products", "[registry]") {
  // amplitudes proportional to (1+sqrt2, 1): q0 = cos t, q1 = sin t with tan t = sqrt2 - 1, t = pi/8
  std::vector<RadicalScalar> amps{rat(1) + sq(2), rat(1)};
  SchmidtVector v = SchmidtVector::from_amplitudes(amps);
  const double t = std::atan(std::sqrt(2.0) - 1.0);
  CHECK(approx(v.weight(0)).real() == Approx(std::cos(t) * std::cos(t)).epsilon(1e-14));
  CHECK(approx(v.weight(1)).real() == Approx(std::sin(t) * std::sin(t)).epsilon(1e-14));
  CHECK(approx(v.pair_product(0, 1)).real() == Approx(std::cos(t) * std::sin(t)).epsilon(1e-14));
  CHECK(v.weight(0) + v.weight(1) == RadicalScalar(1));
  // the weights are not rational: this register is outside the dense family
  CHECK_FALSE(v.weight(0).is_rational());
  // q0 q1 = sqrt2/4 exactly (sin(2t)/2 with 2t = pi/4)
  CHECK(v.pair_product(0, 1) == rat(1, 4) * sq(2));
}

TEST_CASE("key round trip through the parser", "[registry]") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(0, 40);
  for (int k = 0; k < 200; ++k) {
    const unsigned width = 1 + k % 3;
    std::vector<Rational> r(std::size_t{1} << width);
    for (auto& x : r) x = d(rng) + 1;
    SchmidtVector v = make_schmidt_from_ratios(r);
    RegisterHandle h = parse_register(v.key());
    REQUIRE(h->schmidt() == v);
    REQUIRE(h->schmidt().amplitudes() == v.amplitudes());
  }
  std::vector<RadicalScalar> amps{rat(1) + sq(2), rat(1)};
  SchmidtVector e = SchmidtVector::from_amplitudes(amps);
  CHECK(parse_register(e.key())->schmidt() == e);
  CHECK(parse_register("qx[1;1+sqrt(2),1]")->schmidt() == e);
}

TEST_CASE("dense-mode guard and register keys", "[registry]") {
  std::vector<RadicalScalar> amps{rat(1) + sq(2), rat(1)};
  SchmidtVector e = SchmidtVector::from_amplitudes(amps);
  SchmidtVector d = make_schmidt_from_ratios(ratios({2, 1}));
  SystemLayout dense(KeyMode::Dense), exact(KeyMode::Exact);
  CHECK_THROWS_AS(dense.admit(e), DomainError);
  CHECK_NOTHROW(dense.admit(d));
  CHECK_NOTHROW(exact.admit(e));
  CHECK_NOTHROW(exact.admit(d));
  exact.add_slot(0, 2);
  CHECK(exact.ancilla_slots().at(0) == 2);
  CHECK_THROWS_AS(exact.add_slot(1, 0), ShapeError);

  RegisterHandle t = ancilla_register(3);
  CHECK(t->text() == "t3");
  CHECK(t->slot() == 3);
  CHECK_THROWS_AS(t->schmidt(), DomainError);
  RegisterHandle c = catalyst_register(d);
  CHECK(c->text() == "q[1;2,1]");
  CHECK_THROWS_AS(c->slot(), DomainError);
  CHECK(same_register(c, catalyst_register(make_schmidt_from_ratios(ratios({4, 2})))));
  CHECK_FALSE(same_register(c, t));
}
