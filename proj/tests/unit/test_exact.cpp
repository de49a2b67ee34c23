#include <doctest.h>

#include "fixspace/error.hpp"
#include "fixspace/exact.hpp"
#include "error_kind.hpp"
#include "generators.hpp"

using namespace fixspace;
using fixspace::testing::kind_of;
using fixspace::testing::Rng;

namespace {

GaussianRational gr(std::int64_t rn, std::int64_t rd, std::int64_t in, std::int64_t id) {
  return {Rational(rn, rd), Rational(in, id)};
}

}  // namespace

TEST_CASE("rational values are stored reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "2");
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == "1");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational::parse("123456789012345678901234567890/10").to_string() == "12345678901234567890123456789");
  CHECK(kind_of([] { Rational::parse("1/0"); }) == "ParseError");
  CHECK(kind_of([] { Rational::parse("abc"); }) == "ParseError");
  CHECK(kind_of([] { Rational::parse(""); }) == "ParseError");
  CHECK(kind_of([] { Rational::parse("1/-2"); }) == "ParseError");
  CHECK(kind_of([] { Rational::parse("1.5"); }) == "ParseError");
}

TEST_CASE("rational errors") {
  CHECK(kind_of([] { Rational(1, 0); }) == "DivisionByZero");
  CHECK(kind_of([] { (void)(Rational(1) / Rational(0)); }) == "DivisionByZero");
  CHECK(kind_of([] { (void)Rational(1, 2).to_int64(); }) == "NotAnInteger");
  CHECK(Rational(-9, 3).to_int64() == -3);
}

TEST_CASE("products beyond 64 bits stay exact") {
  const Rational big(std::int64_t{1} << 62);
  CHECK((big * big).to_string() == "21267647932558653966460912964485513216");
  CHECK((big * big / big) == big);
  CHECK((Rational(1) / (big * big)).denominator() == "21267647932558653966460912964485513216");
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(5, 3) > Rational(3, 2));
}

TEST_CASE("gaussian multiply examples") {
  const GaussianRational z = gr(3, 7, -2, 5);
  CHECK(multiply(GaussianRational(1), z) == z);
  CHECK(multiply(GaussianRational::i(), GaussianRational::i()) == GaussianRational(-1));
  CHECK(multiply(gr(1, 2, 1, 2), gr(1, 2, -1, 2)) == GaussianRational(Rational(1, 2)));
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(GaussianRational(3)) == GaussianRational(3));
  CHECK(conjugate(GaussianRational::i()) == GaussianRational(Rational(0), Rational(-1)));
}

TEST_CASE("norm_sq examples") {
  CHECK(norm_sq(GaussianRational()) == Rational(0));
  CHECK(norm_sq(gr(3, 5, 4, 5)) == Rational(1));
}

TEST_CASE("gaussian formatting") {
  CHECK(gr(1, 2, -3, 4).to_string() == "1/2-3/4i");
  CHECK(GaussianRational(5).to_string() == "5");
  CHECK(GaussianRational::i().to_string() == "0+1i");
}

TEST_CASE("gaussian inverse and division") {
  CHECK(gr(3, 1, 4, 1).inverse() == gr(3, 25, -4, 25));
  CHECK(kind_of([] { (void)GaussianRational().inverse(); }) == "DivisionByZero");
  CHECK(gr(1, 1, 1, 1) / gr(1, 1, -1, 1) == GaussianRational::i());
}

TEST_CASE("field axioms on random triples") {
  Rng rng(0xE1AC7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = fixspace::testing::random_scalar(rng);
    const auto b = fixspace::testing::random_scalar(rng);
    const auto c = fixspace::testing::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational());
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
  }
}

TEST_CASE("conjugation is a ring involution and norm_sq is multiplicative") {
  Rng rng(0xC0417);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = fixspace::testing::random_scalar(rng);
    const auto b = fixspace::testing::random_scalar(rng);
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    CHECK(norm_sq(a * b) == norm_sq(a) * norm_sq(b));
    CHECK(norm_sq(a) == multiply(a, conjugate(a)).re());
    CHECK(multiply(a, conjugate(a)).im().is_zero());
    CHECK(norm_sq(a) >= Rational(0));
    CHECK((norm_sq(a) == Rational(0)) == a.is_zero());
  }
}

TEST_CASE("to_string and parse round trip") {
  Rng rng(0x5EED);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational r = fixspace::testing::random_rational(rng, 1000);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}
