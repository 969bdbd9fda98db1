#include <catch2/catch_amalgamated.hpp>

#include "hopf/field.hpp"
#include "oracles.hpp"

using namespace hopf;

TEST_CASE("cyclotomic polynomials", "[field]") {
  CHECK(cyclotomic_poly(1) == Poly{Rat(-1), Rat(1)});
  CHECK(cyclotomic_poly(2) == Poly{Rat(1), Rat(1)});
  CHECK(cyclotomic_poly(3) == Poly{Rat(1), Rat(1), Rat(1)});
  CHECK(cyclotomic_poly(4) == Poly{Rat(1), Rat(0), Rat(1)});
  CHECK(cyclotomic_poly(6) == Poly{Rat(1), Rat(-1), Rat(1)});
  CHECK(cyclotomic_poly(12) == Poly{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
}

TEST_CASE("field context construction", "[field]") {
  auto q = field_rational();
  CHECK(q->degree() == 1);
  auto c4 = field_cyclotomic(4);
  CHECK(c4->degree() == 2);
  CHECK(c4->modulus == Poly{Rat(1), Rat(0), Rat(1)});
  CHECK_THROWS_AS(field_cyclotomic(0), std::invalid_argument);
}

TEST_CASE("primitive roots of unity", "[field]") {
  auto c3 = field_cyclotomic(3);
  Scalar z = zeta(c3);
  CHECK((z * z + z + Scalar::one(c3)).is_zero());
  CHECK(z.pow(3).is_one());

  auto c6 = field_cyclotomic(6);
  Scalar w = zeta(c6);
  CHECK(w.pow(6).is_one());
  CHECK(w.pow(3) == -Scalar::one(c6));
  for (long k = 1; k < 6; ++k) CHECK_FALSE(w.pow(k).is_one());

  auto c1 = field_cyclotomic(1);
  CHECK(zeta(c1).is_one());
  auto c2 = field_cyclotomic(2);
  CHECK(zeta(c2) == -Scalar::one(c2));
}

TEST_CASE("field axioms hold on pseudo-random scalars", "[field]") {
  for (auto ctx : {field_rational(), field_cyclotomic(6), field_cyclotomic(12)}) {
    oracle::Lcg rng(0x5eed0001);
    for (int t = 0; t < 40; ++t) {
      Scalar a = oracle::rand_scalar(rng, ctx);
      Scalar b = oracle::rand_scalar(rng, ctx);
      Scalar c = oracle::rand_scalar(rng, ctx);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(ctx));
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Scalar::one(ctx));
        CHECK(a.pow(-2) == (a * a).inv());
      }
    }
  }
}

TEST_CASE("scalar inversion in extensions", "[field]") {
  auto c4 = field_cyclotomic(4);
  Scalar s = Scalar::one(c4) + zeta(c4);  // 1 + i
  CHECK(s * s.inv() == Scalar::one(c4));
  CHECK(s.inv().str() == "1/2-1/2*z");
  CHECK_THROWS_AS(Scalar::zero(c4).inv(), std::domain_error);
}

TEST_CASE("scalar printing and parsing round-trip", "[field]") {
  auto q = field_rational();
  CHECK(parse_scalar(q, "3/2").str() == "3/2");
  CHECK(parse_scalar(q, "-7").str() == "-7");
  CHECK(parse_scalar(q, "0").is_zero());

  auto c4 = field_cyclotomic(4);
  CHECK(parse_scalar(c4, "z").str() == "z");
  CHECK(parse_scalar(c4, "-z^2") == Scalar::one(c4));  // z^2 = -1
  CHECK(parse_scalar(c4, "z^3") == -zeta(c4));
  CHECK(parse_scalar(c4, "1/2-3*z+z^2").str() == "-1/2-3*z");

  auto c12 = field_cyclotomic(12);
  oracle::Lcg rng(0x5eed0002);
  for (int t = 0; t < 30; ++t) {
    Scalar s = oracle::rand_scalar(rng, c12);
    CHECK(parse_scalar(c12, s.str()) == s);
  }
}

TEST_CASE("scalar parse rejects malformed input", "[field]") {
  auto q = field_rational();
  auto c4 = field_cyclotomic(4);
  CHECK_THROWS_AS(parse_scalar(q, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(q, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(q, "z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(q, "1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(c4, "2**z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(c4, "z^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(c4, "z^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(c4, "1.5"), std::invalid_argument);
}

TEST_CASE("mixing field contexts throws", "[field]") {
  auto q = field_rational();
  auto c3 = field_cyclotomic(3);
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(c3), FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(c3) * Scalar::one(field_cyclotomic(4)), FieldMismatch);
  // two independently created contexts of the same field are compatible
  CHECK(Scalar::one(field_cyclotomic(3)) + zeta(c3) == Scalar::one(c3) + zeta(c3));
}

TEST_CASE("rational value extraction", "[field]") {
  auto c3 = field_cyclotomic(3);
  CHECK(Scalar::from_int(c3, 5).rat_value() == 5);
  CHECK_THROWS_AS(zeta(c3).rat_value(), std::domain_error);
}
