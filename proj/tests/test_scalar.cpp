#include "hallforge/scalar.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"

using hallforge::Scalar;

TEST_CASE("v_pow basics") {
  CHECK(Scalar::v_pow(2, 3) == Scalar(3));
  CHECK(Scalar::v_pow(0, 5) == Scalar(1));
  CHECK(Scalar::v_pow(0, 2) == Scalar(1));
  // q = 4 is a perfect square: sqrt(4) = 2 folds into the rational part
  CHECK(Scalar::v_pow(-1, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::v_pow(1, 9) == Scalar(3));
  CHECK(Scalar::v_pow(-2, 3) == Scalar::rational(1, 3));
  CHECK(Scalar::v_pow(3, 2) == Scalar(mpq_class(0), mpq_class(2), 2));
}

TEST_CASE("v_pow exponents add") {
  for (long q : {2L, 3L, 5L, 4L})
    for (long k1 = -6; k1 <= 6; ++k1)
      for (long k2 = -6; k2 <= 6; ++k2)
        CHECK(Scalar::v_pow(k1, q) * Scalar::v_pow(k2, q) == Scalar::v_pow(k1 + k2, q));
}

TEST_CASE("arithmetic examples") {
  // (1 + sqrt2)(1 - sqrt2) = -1
  Scalar a(mpq_class(1), mpq_class(1), 2);
  Scalar b(mpq_class(1), mpq_class(-1), 2);
  CHECK(a * b == Scalar(-1));
  // inv(sqrt q) = (1/q) sqrt q
  for (long q : {2L, 3L, 5L}) {
    Scalar v = Scalar::v_pow(1, q);
    CHECK(v.inv() == Scalar(mpq_class(0), mpq_class(1, q), q));
    CHECK(v * v.inv() == Scalar(1));
  }
  CHECK(Scalar::rational(1, 2) + Scalar(mpq_class(1, 3), mpq_class(1), 2) ==
        Scalar(mpq_class(5, 6), mpq_class(1), 2));
}

TEST_CASE("inverse of zero is an error") {
  CHECK_THROWS_AS(Scalar().inv(), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 gen(20240811);
  auto rnd = [&]() {
    mpq_class a(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 7) + 1);
    mpq_class b(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 7) + 1);
    a.canonicalize();
    b.canonicalize();
    return Scalar(a, b, 3);
  };
  for (int i = 0; i < 300; ++i) {
    Scalar x = rnd(), y = rnd(), z = rnd();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inv() == Scalar(1));
  }
}

TEST_CASE("serialization strings") {
  CHECK(Scalar::rat_str(mpq_class(3, 6)) == "3/6");  // caller canonicalizes
  mpq_class r(3, 6);
  r.canonicalize();
  CHECK(Scalar::rat_str(r) == "1/2");
  CHECK(Scalar::rat_str(mpq_class(4)) == "4");
}
