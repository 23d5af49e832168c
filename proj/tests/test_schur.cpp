#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bta/errors.hpp"
#include "bta/generate.hpp"
#include "bta/schur.hpp"

using namespace bta;

namespace {

ComplexRational cr(long re, long im = 0) {
  return {make_rational(re), make_rational(im)};
}

const SchurShape shape21{2, 1};

SchurElement radical21(long x1, long x2) {
  DenseMatrix corner(2, 1);
  corner(0, 0) = cr(x1);
  corner(1, 0) = cr(x2);
  return {shape21, cr(0), std::move(corner)};
}

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(SchurShape(0, 1), InvalidShape);
  CHECK_THROWS_AS(SchurShape(1, 0), InvalidShape);
  CHECK_THROWS_AS(SchurShape(3, 1), InvalidShape);
  CHECK_NOTHROW(SchurShape(3, 1, SchurShape::Relaxed::yes));
  CHECK_THROWS_AS(SchurShape(4, 1, SchurShape::Relaxed::no), InvalidShape);
  CHECK(SchurShape(2, 2).d() == 4);
  CHECK(SchurShape(2, 1).element_dim() == 3);
}

TEST_CASE("construction and embedding") {
  SUBCASE("unit element embeds to the identity") {
    const SchurElement one = SchurElement::identity(shape21);
    CHECK(one.embed() == DenseMatrix::identity(3));
  }
  SUBCASE("radical element fills only the corner column") {
    const SchurElement n = radical21(4, -5);
    const DenseMatrix m = n.embed();
    CHECK(m(0, 2) == cr(4));
    CHECK(m(1, 2) == cr(-5));
    CHECK(m(0, 0).is_zero());
    CHECK(m(1, 1).is_zero());
    CHECK(m(2, 2).is_zero());
    CHECK(n.is_radical());
  }
  SUBCASE("corner block shape is enforced") {
    CHECK_THROWS_AS(SchurElement(shape21, cr(1), DenseMatrix::zero(1, 2)),
                    DimensionMismatch);
  }
  SUBCASE("zero element") {
    CHECK(SchurElement::zero(shape21).embed().is_zero());
  }
}

TEST_CASE("multiplication") {
  SUBCASE("the radical squares to zero") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = Rng::for_trial(23, t);
      const SchurElement a = random_radical(rng, shape21);
      const SchurElement b = random_radical(rng, shape21);
      CHECK((a * b).is_zero());
    }
  }
  SUBCASE("identity is neutral") {
    Rng rng = Rng::for_trial(29, 0);
    const SchurElement b = random_schur_element(rng, shape21);
    CHECK(SchurElement::identity(shape21) * b == b);
  }
  SUBCASE("matches the dense embedding, re-extracted") {
    for (const SchurShape& shape : {SchurShape(1, 1), SchurShape(2, 1), SchurShape(2, 2)}) {
      for (std::uint64_t t = 0; t < 50; ++t) {
        Rng rng = Rng::for_trial(31, t);
        const SchurElement a = random_schur_element(rng, shape);
        const SchurElement b = random_schur_element(rng, shape);
        CHECK(a * b == SchurElement::extract(a.embed() * b.embed(), shape));
      }
    }
  }
  SUBCASE("commutativity and homomorphism") {
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng = Rng::for_trial(37, t);
      const SchurElement a = random_schur_element(rng, shape21);
      const SchurElement b = random_schur_element(rng, shape21);
      CHECK(a * b == b * a);
      CHECK((a * b).embed() == a.embed() * b.embed());
      CHECK((a + b).embed() == a.embed() + b.embed());
    }
  }
  SUBCASE("the radical is an ideal") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = Rng::for_trial(41, t);
      const SchurElement r = random_radical(rng, shape21);
      const SchurElement any = random_schur_element(rng, shape21);
      CHECK((r * any).is_radical());
    }
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(SchurElement::identity(shape21) * SchurElement::identity({1, 1}),
                    DimensionMismatch);
  }
}

TEST_CASE("invertibility") {
  SUBCASE("nonzero scalar part inverts") {
    Rng rng = Rng::for_trial(43, 0);
    DenseMatrix corner(2, 1);
    corner(0, 0) = rng.small_complex();
    corner(1, 0) = rng.small_complex();
    const SchurElement a{shape21, cr(2), std::move(corner)};
    REQUIRE(a.is_invertible());
    CHECK(a * a.inverse() == SchurElement::identity(shape21));
    CHECK(a.inverse().embed() * a.embed() == DenseMatrix::identity(3));
  }
  SUBCASE("zero scalar part: kernel contains the leading coordinates") {
    const SchurElement n = radical21(1, 2);
    CHECK_FALSE(n.is_invertible());
    const Subspace ker = nullspace(n.embed());
    Vec e1{cr(1), cr(0), cr(0)};
    Vec e2{cr(0), cr(1), cr(0)};
    CHECK(ker.contains(e1));
    CHECK(ker.contains(e2));
  }
  SUBCASE("inverse of a radical element throws") {
    CHECK_THROWS_AS(radical21(1, 0).inverse(), NotInvertible);
  }
}

TEST_CASE("extraction") {
  SUBCASE("round trip") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = Rng::for_trial(47, t);
      const SchurElement a = random_schur_element(rng, SchurShape(2, 2));
      CHECK(SchurElement::extract(a.embed(), SchurShape(2, 2)) == a);
    }
  }
  SUBCASE("unequal diagonal scalars are rejected") {
    DenseMatrix m = DenseMatrix::identity(3);
    m(1, 1) = cr(2);
    CHECK_THROWS_AS(SchurElement::extract(m, shape21), NotInSchurAlgebra);
  }
  SUBCASE("off-pattern entries are rejected") {
    DenseMatrix m = DenseMatrix::identity(3);
    m(2, 0) = cr(1);
    CHECK_THROWS_AS(SchurElement::extract(m, shape21), NotInSchurAlgebra);
    DenseMatrix m2 = DenseMatrix::identity(3);
    m2(0, 1) = cr(1);  // inside the lambda*I block
    CHECK_THROWS_AS(SchurElement::extract(m2, shape21), NotInSchurAlgebra);
  }
  SUBCASE("wrong size") {
    CHECK_THROWS_AS(SchurElement::extract(DenseMatrix::identity(4), shape21),
                    DimensionMismatch);
  }
}

TEST_CASE("linear structure") {
  SUBCASE("coordinates determine the element") {
    Rng rng = Rng::for_trial(53, 0);
    const SchurElement a = random_schur_element(rng, SchurShape(2, 2));
    CHECK(SchurElement::from_coords(SchurShape(2, 2), a.coords()) == a);
    CHECK(a.coords().size() == 5);
  }
  SUBCASE("the coordinate elements are independent: dim O = sigma*tau + 1") {
    const std::size_t k = shape21.element_dim();
    std::vector<Vec> coords;
    for (std::size_t m = 0; m < k; ++m) {
      Vec unit(k);
      unit[m] = cr(1);
      coords.push_back(SchurElement::from_coords(shape21, unit).coords());
    }
    CHECK(Subspace::span(coords, k).dim() == k);
  }
}

TEST_CASE("kernel intersection") {
  SUBCASE("identity against zero") {
    CHECK(kernel_intersection_trivial(SchurElement::identity(shape21),
                                      SchurElement::zero(shape21)));
  }
  SUBCASE("two radicals always share kernel vectors") {
    for (std::uint64_t t = 0; t < 30; ++t) {
      Rng rng = Rng::for_trial(59, t);
      CHECK_FALSE(kernel_intersection_trivial(random_radical(rng, shape21),
                                              random_radical(rng, shape21)));
    }
  }
  SUBCASE("one invertible member suffices") {
    const SchurElement b = SchurElement::scalar(shape21, cr(5));
    CHECK(kernel_intersection_trivial(radical21(1, 1), b));
  }
  SUBCASE("agrees with the scalar-part shortcut on random pairs") {
    for (const SchurShape& shape : {SchurShape(1, 1), SchurShape(2, 1), SchurShape(2, 2)}) {
      for (std::uint64_t t = 0; t < 60; ++t) {
        Rng rng = Rng::for_trial(61, t);
        const SchurElement a = random_schur_element(rng, shape);
        const SchurElement b = random_schur_element(rng, shape);
        const bool shortcut = a.is_invertible() || b.is_invertible();
        CHECK(kernel_intersection_trivial(a, b) == shortcut);
      }
    }
  }
}

TEST_CASE("linear independence") {
  SUBCASE("the two corner directions") {
    CHECK(schur_linearly_independent(radical21(1, 0), radical21(0, 1)));
  }
  SUBCASE("scalar multiples are dependent") {
    Rng rng = Rng::for_trial(67, 0);
    const SchurElement a = random_schur_element(rng, shape21);
    CHECK_FALSE(schur_linearly_independent(a, cr(2) * a));
  }
  SUBCASE("zero is dependent with anything") {
    CHECK_FALSE(schur_linearly_independent(radical21(1, 0), SchurElement::zero(shape21)));
  }
}
