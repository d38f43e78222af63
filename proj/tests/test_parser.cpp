#include <catch2/catch.hpp>

#include <fstream>
#include <random>

#include "embz/errors.hpp"
#include "support.hpp"

using namespace embz;
using namespace embz::test;

namespace {

struct GoldenLine {
  std::string input;
  std::string expected;
};

std::vector<GoldenLine> load_golden(const std::string& name) {
  std::ifstream in(std::string(EMBZ_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::vector<GoldenLine> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

}  // namespace

TEST_CASE("golden corpus", "[parser]") {
  auto corpus = load_golden("elements.tsv");
  CHECK(corpus.size() > 40);
  for (const auto& [input, expected] : corpus) {
    INFO(input);
    if (expected.rfind('!', 0) == 0) {
      try {
        parse_element(input);
        FAIL("expected a parse error");
      } catch (const ParseError& e) {
        const std::string where = std::to_string(e.span().line) + ":" + std::to_string(e.span().column);
        CHECK("!" + where + " " + e.message() == expected);
        CHECK(e.span().start <= e.span().end);
        CHECK_FALSE(e.message().empty());
      }
      continue;
    }
    AlgebraElement a = parse_element(input);
    CHECK(format_element(a) == expected);
    // canonical text is a fixed point
    CHECK(parse_element(expected) == a);
    CHECK(format_element(parse_element(expected)) == expected);
  }
}

TEST_CASE("parse_element examples", "[parser]") {
  AlgebraElement a = parse_element("X@A:q[1;1,1]:3 Z@B:q[1;1,1]:3");
  REQUIRE(a.terms().size() == 1);
  const auto& [word, coef] = *a.terms().begin();
  CHECK(word.size() == 2);
  CHECK(coef == RadicalScalar(1));

  AlgebraElement y = parse_element("sqrt(2)/2 * Y@A:t0");
  PauliWord xz = PauliWord::single(ancilla_address(Party::Alice, ancilla_register(0)), kLetterXZ);
  CHECK(y == AlgebraElement(xz, RadicalScalar::i() * RadicalScalar::sqrt_int(2) * RadicalScalar(make_rational(1, 2))));

  try {
    parse_element("X@A:q[1;1,1]");
    FAIL("missing site accepted");
  } catch (const ParseError& e) {
    CHECK(e.span().start == 2);
    CHECK(e.span().end == 12);
    CHECK(e.span().column == 3);
    CHECK(std::string(e.what()).find("1:3") == 0);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("Y matches its matrix", "[parser]") {
  auto a = ancilla_address(Party::Bob, ancilla_register(0));
  Mat y(2, 2);
  y << 0, cd(0, -1), cd(0, 1), 0;
  CHECK((element_matrix(parse_element("Y@B:t0"), {a}) - y).norm() < 1e-15);
}

TEST_CASE("errors carry line and column", "[parser]") {
  try {
    parse_element("X@A:t0 +\n  Q@B:t0");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 3);
  }
  CHECK_THROWS_AS(parse_element("X@A:t0 )"), ParseError);
  CHECK_THROWS_AS(parse_element(""), ParseError);
}

TEST_CASE("other entry points", "[parser]") {
  CHECK(parse_scalar("(2/3)*sqrt(2)") == RadicalScalar(make_rational(2, 3)) * RadicalScalar::sqrt_int(2));
  CHECK(parse_scalar("  1/3 ") == RadicalScalar(make_rational(1, 3)));
  CHECK(parse_scalar("(0+1i)") == RadicalScalar::i());
  CHECK(parse_scalar("-sqrt(3)") == -RadicalScalar::sqrt_int(3));
  CHECK(parse_scalar("sqrt(2/3)") == RadicalScalar(make_rational(1, 3)) * RadicalScalar::sqrt_int(6));
  CHECK_THROWS_AS(parse_scalar("X@A:t0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/(1-1)"), ParseError);

  QubitAddress a = parse_address("B:q[2;1,1,1,1]:-4:1");
  CHECK(a.party == Party::Bob);
  CHECK(a.site == -4);
  CHECK(a.lane == 1);
  CHECK(a.text() == "B:q[2;1,1,1,1]:-4:1");
  CHECK(parse_address("A:t7").reg->slot() == 7);

  CHECK(parse_word("X@A:t0 Z@B:t0").size() == 2);
  CHECK(parse_word("I").is_identity());
  CHECK_THROWS_AS(parse_word("2*X@A:t0"), ParseError);
  CHECK_THROWS_AS(parse_word("X@A:t0 + Z@A:t0"), ParseError);
  CHECK_THROWS_AS(parse_word("Y@A:t0"), ParseError);

  // different spellings of one Schmidt vector name the same register
  AlgebraElement e = parse_element("X@A:q[1;1,1]:1 X@B:q[1;2,2]:1");
  const auto& support = e.terms().begin()->first.support();
  CHECK(same_register(support[0].first.reg, support[1].first.reg));
  CHECK(support[1].first.reg->text() == "q[1;1,1]");
}

TEST_CASE("morphism scripts", "[parser]") {
  auto reg = bell();
  CHECK(parse_morphism("shift(q[1;1,1], A, +1)") == shift_morphism(reg, Party::Alice, 1));
  CHECK(parse_morphism("shift(q[1;1,1], B, -1)") == shift_morphism(reg, Party::Bob, -1));
  CHECK(parse_morphism("swap(q[1;1,1], A, t3)") == swap_morphism(reg, Party::Alice, 3));
  CHECK(parse_morphism("embezzle(q[1;1,1], t0);") == embezzle_morphism(reg, 0));
  CHECK(parse_morphism("swap(q[1;1,1], A, t0); shift(q[1;1,1], A, +1); swap(q[1;1,1], B, t0); shift(q[1;1,1], B, +1)") ==
        embezzle_morphism(reg, 0));
  CHECK_THROWS_AS(parse_morphism("shift(q[1;1,1], A, +2)"), ParseError);
  CHECK_THROWS_AS(parse_morphism("rotate(q[1;1,1], A, +1)"), ParseError);
  CHECK_THROWS_AS(parse_morphism("embezzle(t0, t1)"), ParseError);
  CHECK_THROWS_AS(parse_morphism("swap(q[1;1,1], C, t0)"), ParseError);
  CHECK_THROWS_AS(parse_morphism("swap(q[1;1,1], A, 0)"), ParseError);
}

TEST_CASE("format and parse are inverse on random elements", "[parser]") {
  auto window = make_window(reg_from_ratios({3, 1}), -2, 2, {0, 1});
  auto exact = make_window(catalyst_register(parse_register("qx[1;1+sqrt(3),2]")->schmidt()), 0, 1);
  window.insert(window.end(), exact.begin(), exact.end());
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> c(-5, 5), n(0, 4);
  for (int k = 0; k < 300; ++k) {
    AlgebraElement a;
    for (int t = n(rng); t > 0; --t) {
      RadicalScalar coef = RadicalScalar(GaussianRational(make_rational(c(rng), 3), make_rational(c(rng), 2))) +
                           RadicalScalar(c(rng)) * RadicalScalar::sqrt_int(5);
      a += AlgebraElement(random_word(window, 5, rng()), coef);
    }
    const std::string text = format_element(a);
    REQUIRE(parse_element(text) == a);
    REQUIRE(format_element(parse_element(text)) == text);
  }
}
