#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "embz/errors.hpp"
#include "support.hpp"

using namespace embz;
using namespace embz::test;

namespace {

PauliWord one(const QubitAddress& a, PauliLetter l) { return PauliWord::single(a, l); }

// relabel every address of w through the map from[k] -> to[k]
PauliWord relabel(const PauliWord& w, const std::vector<QubitAddress>& from, const std::vector<QubitAddress>& to) {
  std::vector<PauliWord::Entry> entries;
  for (const auto& [addr, letter] : w.support()) {
    auto it = std::find(from.begin(), from.end(), addr);
    entries.emplace_back(to[static_cast<std::size_t>(it - from.begin())], letter);
  }
  return PauliWord(std::move(entries));
}

}  // namespace

TEST_CASE("word_mul examples", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 0);
  CHECK(word_mul(one(a, kLetterX), one(a, kLetterZ)) == SignedWord{1, one(a, kLetterXZ)});
  CHECK(word_mul(one(a, kLetterZ), one(a, kLetterX)) == SignedWord{-1, one(a, kLetterXZ)});
  CHECK(word_mul(one(a, kLetterXZ), one(a, kLetterXZ)) == SignedWord{-1, PauliWord{}});
  // 2x2 oracle for (XZ)^2
  Mat xz = letter_matrix(kLetterXZ);
  CHECK((xz * xz).isApprox(-Mat::Identity(2, 2)));
}

TEST_CASE("word_adjoint examples", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 0);
  auto b = catalyst_address(Party::Bob, bell(), 0);
  CHECK(word_adjoint(one(a, kLetterX)) == SignedWord{1, one(a, kLetterX)});
  CHECK(word_adjoint(one(a, kLetterXZ)) == SignedWord{-1, one(a, kLetterXZ)});
  PauliWord two({{a, kLetterXZ}, {b, kLetterXZ}});
  CHECK(word_adjoint(two) == SignedWord{1, two});
}

TEST_CASE("elem_mul examples", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 1);
  auto b = ancilla_address(Party::Bob, ancilla_register(0));
  AlgebraElement x(one(a, kLetterX)), z(one(a, kLetterZ));
  CHECK(elem_mul(x, x) == AlgebraElement::identity());
  CHECK(elem_mul(x + z, x - z) == AlgebraElement(one(a, kLetterXZ), RadicalScalar(-2)));
  AlgebraElement half_x(one(a, kLetterX), RadicalScalar(make_rational(1, 2)));
  AlgebraElement two_z(one(b, kLetterZ), RadicalScalar(2));
  CHECK(elem_mul(half_x, two_z) == AlgebraElement(PauliWord({{a, kLetterX}, {b, kLetterZ}})));
  // dense oracle for the second example
  std::vector<QubitAddress> q{a};
  Mat lhs = element_matrix(x + z, q) * element_matrix(x - z, q);
  CHECK(lhs.isApprox(element_matrix(elem_mul(x + z, x - z), q)));
}

TEST_CASE("exhaustive 1- and 2-qubit oracle for word_mul", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 2);
  auto b = catalyst_address(Party::Bob, bell(), 2);
  const PauliLetter letters[] = {{false, false}, kLetterX, kLetterZ, kLetterXZ};
  std::vector<QubitAddress> q1{a}, q2{a, b};
  for (auto l1 : letters) {
    for (auto l2 : letters) {
      SignedWord p = word_mul(one(a, l1), one(a, l2));
      Mat expect = letter_matrix(l1) * letter_matrix(l2);
      REQUIRE((static_cast<double>(p.sign) * word_matrix(p.word, q1) - expect).norm() == 0.0);
    }
  }
  std::vector<PauliWord> words;
  for (auto la : letters) {
    for (auto lb : letters) words.push_back(PauliWord({{a, la}, {b, lb}}));
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      SignedWord p = word_mul(u, v);
      Mat expect = word_matrix(u, q2) * word_matrix(v, q2);
      REQUIRE((static_cast<double>(p.sign) * word_matrix(p.word, q2) - expect).norm() == 0.0);
      SignedWord adj = word_adjoint(u);
      REQUIRE((static_cast<double>(adj.sign) * word_matrix(adj.word, q2) - word_matrix(u, q2).adjoint()).norm() == 0.0);
    }
  }
}

TEST_CASE("elem_mul against 4x4 matrices", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 0);
  auto b = ancilla_address(Party::Alice, ancilla_register(3));
  std::vector<QubitAddress> q{a, b};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4), nterms(1, 4);
  auto random_elem = [&] {
    AlgebraElement e;
    for (int t = nterms(rng); t > 0; --t) {
      RadicalScalar c = RadicalScalar(coef(rng)) + RadicalScalar(coef(rng)) * RadicalScalar::sqrt_int(2) +
                        RadicalScalar(coef(rng)) * RadicalScalar::i();
      e += AlgebraElement(random_word(q, 2, rng()), c);
    }
    return e;
  };
  for (int k = 0; k < 200; ++k) {
    AlgebraElement x = random_elem(), y = random_elem();
    Mat expect = element_matrix(x, q) * element_matrix(y, q);
    REQUIRE((element_matrix(elem_mul(x, y), q) - expect).norm() < 1e-9);
    REQUIRE((element_matrix(x.adjoint(), q) - element_matrix(x, q).adjoint()).norm() < 1e-9);
  }
}

TEST_CASE("random_word contract", "[pauli]") {
  auto window = make_window(bell(), -2, 3, {0});
  CHECK(random_word(window, 0, 99).is_identity());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PauliWord w = random_word(window, 6, seed);
    REQUIRE(w.size() <= 6);
    for (const auto& [addr, letter] : w.support()) {
      REQUIRE(std::find(window.begin(), window.end(), addr) != window.end());
    }
    REQUIRE(w == random_word(window, 6, seed));
  }
  std::vector<QubitAddress> empty;
  CHECK_THROWS_AS(random_word(empty, 0, 1), DomainError);
  CHECK_THROWS_AS(random_word(window, window.size() + 1, 1), DomainError);

  // letters roughly uniform over X, Z, XZ
  int counts[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    for (const auto& [addr, l] : random_word(window, 4, seed).support()) ++counts[l.x && l.z ? 2 : l.x ? 0 : 1];
  }
  const int total = counts[0] + counts[1] + counts[2];
  for (int c : counts) CHECK(std::abs(3.0 * c / total - 1.0) < 0.1);
}

TEST_CASE("associativity, commutation, involution on random words", "[pauli]") {
  auto window = make_window(bell(), -5, 6, {0, 1});
  for (std::uint64_t k = 0; k < 500; ++k) {
    PauliWord u = random_word(window, 8, 3 * k), v = random_word(window, 8, 3 * k + 1),
              w = random_word(window, 8, 3 * k + 2);
    SignedWord uv = word_mul(u, v), vw = word_mul(v, w);
    SignedWord left = word_mul(uv.word, w), right = word_mul(u, vw.word);
    REQUIRE(left.word == right.word);
    REQUIRE(uv.sign * left.sign == vw.sign * right.sign);

    // u v = (-1)^{f(z_u, x_v) + f(x_u, z_v)} v u
    SignedWord vu = word_mul(v, u);
    REQUIRE(uv.word == vu.word);
    int f1 = 0, f2 = 0;
    for (const auto& [addr, l] : u.support()) {
      PauliLetter r = v.letter_at(addr);
      f1 ^= static_cast<int>(l.z && r.x);
      f2 ^= static_cast<int>(l.x && r.z);
    }
    REQUIRE(uv.sign == ((f1 ^ f2) ? -vu.sign : vu.sign));

    SignedWord a1 = word_adjoint(u);
    SignedWord a2 = word_adjoint(a1.word);
    REQUIRE(a2.word == u);
    REQUIRE(a1.sign * a2.sign == 1);

    // (uv)* = v* u*
    SignedWord uv_adj = word_adjoint(uv.word);
    SignedWord va = word_adjoint(v), ua = word_adjoint(u);
    SignedWord prod = word_mul(va.word, ua.word);
    REQUIRE(uv_adj.word == prod.word);
    REQUIRE(uv.sign * uv_adj.sign == va.sign * ua.sign * prod.sign);
  }
}

TEST_CASE("sign of word_mul is invariant under address bijections", "[pauli]") {
  auto window = make_window(bell(), -4, 5, {0});
  std::mt19937_64 rng(23);
  for (std::uint64_t k = 0; k < 500; ++k) {
    std::vector<QubitAddress> perm = window;
    std::shuffle(perm.begin(), perm.end(), rng);
    PauliWord u = random_word(window, 8, 1000 + 2 * k), v = random_word(window, 8, 1001 + 2 * k);
    SignedWord before = word_mul(u, v);
    SignedWord after = word_mul(relabel(u, window, perm), relabel(v, window, perm));
    REQUIRE(before.sign == after.sign);
    REQUIRE(relabel(before.word, window, perm) == after.word);
  }
}

TEST_CASE("word construction and text", "[pauli]") {
  auto reg = bell();
  auto a3 = catalyst_address(Party::Alice, reg, 3);
  auto b3 = catalyst_address(Party::Bob, reg, 3);
  PauliWord w({{b3, kLetterZ}, {a3, kLetterX}});
  CHECK(w.text() == "X@A:q[1;1,1]:3 Z@B:q[1;1,1]:3");
  CHECK(PauliWord::single(a3, kLetterXZ).text() == "X@A:q[1;1,1]:3 Z@A:q[1;1,1]:3");
  CHECK(PauliWord{}.text() == "I");
  CHECK(PauliWord({{a3, PauliLetter{}}}).is_identity());
  CHECK_THROWS_AS(PauliWord({{a3, kLetterX}, {a3, kLetterZ}}), DomainError);
  CHECK_THROWS_AS(catalyst_address(Party::Alice, reg, 0, 1), ShapeError);
  CHECK(ancilla_address(Party::Bob, ancilla_register(2), 1).text() == "B:t2:1");
  // ordering: party, then register text, then site, then lane
  CHECK(catalyst_address(Party::Alice, reg, 7) < catalyst_address(Party::Bob, reg, -7));
  CHECK(catalyst_address(Party::Alice, reg, -1) < catalyst_address(Party::Alice, reg, 0));
}

TEST_CASE("algebra element bookkeeping", "[pauli]") {
  auto a = catalyst_address(Party::Alice, bell(), 1);
  AlgebraElement x(PauliWord::single(a, kLetterX), RadicalScalar(3));
  AlgebraElement y = x;
  y -= x;
  CHECK(y.is_zero());
  CHECK(x.coefficient(PauliWord{}).is_zero());
  CHECK(x.coefficient(PauliWord::single(a, kLetterX)) == RadicalScalar(3));
  AlgebraElement xz(PauliWord::single(a, kLetterXZ), RadicalScalar::i());
  // (i XZ)* = -i (XZ)* = -i (-XZ) = i XZ
  CHECK(xz.adjoint() == xz);
  CHECK((RadicalScalar(0) * x).is_zero());
}
