#include <doctest.h>

#include "helpers.hpp"
#include "whakit/scalar.hpp"

using namespace whakit;

TEST_SUITE("scalar") {
  TEST_CASE("rational parsing and rendering") {
    const Field q = Field::rational();
    CHECK(render_scalar(parse_scalar("6/8", q)) == "3/4");
    CHECK(render_scalar(parse_scalar("-2", q)) == "-2");
    CHECK(render_scalar(parse_scalar("1/2 - 3/2", q)) == "-1");
    CHECK(parse_scalar("0", q).is_zero());
  }

  TEST_CASE("cyclotomic reduction") {
    const Field f3 = Field::cyclotomic(3);
    // w^2 = -w - 1 modulo 1 + x + x^2.
    CHECK(render_scalar(parse_scalar("w^2+1", f3)) == "-w");
    CHECK(parse_scalar("w^3", f3).is_one());
    CHECK(parse_scalar("1 + w + w^2", f3).is_zero());
    CHECK(render_scalar(parse_scalar("w^-1", f3)) == "-w-1");
  }

  TEST_CASE("roots of unity") {
    for (unsigned n = 2; n <= 9; ++n) {
      const Field f = Field::cyclotomic(n);
      CHECK((Scalar::root_power(f, n) == Scalar(1)));
      Scalar sum;
      for (unsigned k = 0; k < n; ++k) sum += Scalar::root_power(f, k);
      CHECK(sum.is_zero());
      for (unsigned k = 1; k < n; ++k) CHECK_FALSE(Scalar::root_power(f, k).is_one());
    }
  }

  TEST_CASE("input errors carry their kind") {
    auto kind_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidInput;
    };
    CHECK(kind_of([] { parse_scalar("w", Field::rational()); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { parse_scalar("1/0", Field::rational()); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { parse_scalar("1 +", Field::rational()); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { Scalar(0).inverse(); }) == ErrorKind::DivisionByZero);
  }

  TEST_CASE("field axioms on random elements") {
    Lcg g(11);
    for (unsigned order : {1u, 3u, 4u, 5u, 12u}) {
      const Field f = order == 1 ? Field::rational() : Field::cyclotomic(order);
      for (int t = 0; t < 60; ++t) {
        const Scalar a = th::random_scalar(g, f), b = th::random_scalar(g, f), c = th::random_scalar(g, f);
        CHECK(((a * b) * c == a * (b * c)));
        CHECK((a * (b + c) == a * b + a * c));
        CHECK((a + b == b + a));
        CHECK((a * b == b * a));
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK((parse_scalar(render_scalar(a), f) == a));
      }
    }
  }

  TEST_CASE("rationals embed into cyclotomic fields") {
    const Field f5 = Field::cyclotomic(5);
    const Scalar w = Scalar::root_power(f5, 1);
    CHECK((Scalar::fraction(1, 2) * w + Scalar::fraction(1, 2) * w == w));
    CHECK((Scalar(3).in_field(f5) == parse_scalar("3", f5)));
  }
}
