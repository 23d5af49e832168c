#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bta/errors.hpp"
#include "bta/generate.hpp"
#include "bta/matrix.hpp"
#include "bta/subspace.hpp"

using namespace bta;

namespace {

ComplexRational cr(long re, long im = 0) {
  return {make_rational(re), make_rational(im)};
}

DenseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.small_complex();
  }
  return m;
}

// independent oracle: recompute every entry as an explicit sum of products
DenseMatrix schoolbook_product(const DenseMatrix& a, const DenseMatrix& b) {
  REQUIRE(a.cols() == b.rows());
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ComplexRational sum;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

Vec vec(std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(cr(e));
  return v;
}

bool is_reduced(const Rational& q) {
  return q.get_den() > 0 && gcd(q.get_num(), q.get_den()) == 1;
}

}  // namespace

TEST_CASE("complex rational arithmetic is exact and canonical") {
  SUBCASE("(a+b)-b recovers a bitwise") {
    for (std::uint64_t t = 0; t < 200; ++t) {
      Rng rng = Rng::for_trial(11, t);
      const ComplexRational a = rng.small_complex();
      const ComplexRational b = rng.small_complex();
      const ComplexRational back = (a + b) - b;
      CHECK(back == a);
      CHECK(back.re().get_num() == a.re().get_num());
      CHECK(back.re().get_den() == a.re().get_den());
      CHECK(is_reduced(back.re()));
      CHECK(is_reduced(back.im()));
    }
  }
  SUBCASE("products and inverses stay reduced") {
    const ComplexRational x{make_rational(2, 4), make_rational(-6, 4)};
    CHECK(rational_to_string(x.re()) == "1/2");
    CHECK(rational_to_string(x.im()) == "-3/2");
    const ComplexRational y = x * x.inverse();
    CHECK(y == cr(1));
  }
  SUBCASE("zero has no inverse") {
    CHECK_THROWS_AS(ComplexRational{}.inverse(), NotInvertible);
  }
  SUBCASE("string round trips") {
    CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
    CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(rational_to_string(parse_rational("5")) == "5/1");
    CHECK(rational_to_string(Rational(0)) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ParseError);
  }
}

TEST_CASE("matrix product") {
  SUBCASE("identity is neutral") {
    Rng rng = Rng::for_trial(3, 0);
    const DenseMatrix m = random_matrix(rng, 2, 2);
    CHECK(DenseMatrix::identity(2) * m == m);
    CHECK(m * DenseMatrix::identity(2) == m);
  }
  SUBCASE("nilpotent square") {
    DenseMatrix n(2, 2);
    n(0, 1) = cr(1);
    CHECK((n * n).is_zero());
  }
  SUBCASE("random 3x3 against the schoolbook oracle") {
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng = Rng::for_trial(5, t);
      const DenseMatrix a = random_matrix(rng, 3, 3);
      const DenseMatrix b = random_matrix(rng, 3, 3);
      CHECK(a * b == schoolbook_product(a, b));
    }
  }
  SUBCASE("associativity on random triples") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = Rng::for_trial(7, t);
      const DenseMatrix a = random_matrix(rng, 2, 3);
      const DenseMatrix b = random_matrix(rng, 3, 2);
      const DenseMatrix c = random_matrix(rng, 2, 4);
      CHECK((a * b) * c == a * (b * c));
    }
  }
  SUBCASE("inner dimension mismatch") {
    const DenseMatrix a(2, 3);
    const DenseMatrix b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
  }
}

TEST_CASE("nullspace") {
  SUBCASE("zero matrix has full kernel") {
    const Subspace ker = nullspace(DenseMatrix::zero(3, 3));
    CHECK(ker.dim() == 3);
    CHECK(ker.is_full());
  }
  SUBCASE("identity has trivial kernel") {
    CHECK(nullspace(DenseMatrix::identity(3)).is_zero());
  }
  SUBCASE("strictly upper triangular 3x3 kernel contains e1, e2") {
    // [[0,0,x1],[0,0,x2],[0,0,0]] kills the first two coordinates
    DenseMatrix m(3, 3);
    m(0, 2) = cr(2);
    m(1, 2) = cr(-1);
    const Subspace ker = nullspace(m);
    CHECK(ker.dim() == 2);
    CHECK(ker.contains(vec({1, 0, 0})));
    CHECK(ker.contains(vec({0, 1, 0})));
    CHECK_FALSE(ker.contains(vec({0, 0, 1})));
  }
  SUBCASE("rank-nullity on random matrices") {
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng = Rng::for_trial(13, t);
      const std::size_t rows = 1 + rng.below(5);
      const std::size_t cols = 1 + rng.below(5);
      const DenseMatrix m = random_matrix(rng, rows, cols);
      CHECK(rank(m) + nullspace(m).dim() == cols);
      // every basis vector really is killed
      const Subspace ker = nullspace(m);
      for (const Vec& v : ker.basis()) {
        DenseMatrix col(cols, 1);
        for (std::size_t r = 0; r < cols; ++r) col(r, 0) = v[r];
        CHECK((m * col).is_zero());
      }
    }
  }
}

TEST_CASE("span and canonical form") {
  SUBCASE("redundant vectors collapse") {
    const Subspace s = Subspace::span({vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2);
    CHECK(s.dim() == 2);
  }
  SUBCASE("empty set spans zero") {
    CHECK(Subspace::span({}, 4).is_zero());
  }
  SUBCASE("scaling normalizes") {
    const Subspace s = Subspace::span({vec({2, 4})}, 2);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis()[0] == vec({1, 2}));
  }
  SUBCASE("span is idempotent and order-independent") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = Rng::for_trial(17, t);
      std::vector<Vec> vectors;
      const std::size_t ambient = 4;
      for (std::size_t i = 0, count = 1 + rng.below(5); i < count; ++i) {
        Vec v(ambient);
        for (auto& x : v) x = rng.small_complex();
        vectors.push_back(std::move(v));
      }
      const Subspace s = Subspace::span(vectors, ambient);
      CHECK(Subspace::span(s.basis(), ambient) == s);
      std::reverse(vectors.begin(), vectors.end());
      CHECK(Subspace::span(vectors, ambient) == s);
    }
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(Subspace::span({vec({1, 2, 3})}, 2), DimensionMismatch);
  }
}

TEST_CASE("membership") {
  SUBCASE("full space contains everything") {
    const Subspace full = Subspace::span({vec({1, 0}), vec({0, 1})}, 2);
    CHECK(full.contains(vec({7, -3})));
  }
  SUBCASE("zero subspace contains only zero") {
    const Subspace z = Subspace::zero(2);
    CHECK(z.contains(vec({0, 0})));
    CHECK_FALSE(z.contains(vec({0, 1})));
  }
  SUBCASE("scaled vector of a line") {
    const Subspace line = Subspace::span({vec({1, 2})}, 2);
    CHECK(line.contains(vec({3, 6})));
    CHECK_FALSE(line.contains(vec({3, 5})));
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(Subspace::zero(2).contains(vec({1, 2, 3})), DimensionMismatch);
  }
}

TEST_CASE("subspace equality") {
  SUBCASE("different spanning sets of the plane") {
    const Subspace s1 = Subspace::span({vec({1, 0}), vec({0, 1})}, 2);
    const Subspace s2 = Subspace::span({vec({1, 1}), vec({1, -1})}, 2);
    CHECK(s1 == s2);
  }
  SUBCASE("zero differs from full") {
    CHECK(Subspace::zero(2) != Subspace::span({vec({1, 0}), vec({0, 1})}, 2));
  }
  SUBCASE("equality is an equivalence relation on random spans") {
    for (std::uint64_t t = 0; t < 30; ++t) {
      Rng rng = Rng::for_trial(19, t);
      std::vector<Vec> vectors;
      for (std::size_t i = 0; i < 3; ++i) {
        Vec v(3);
        for (auto& x : v) x = rng.small_complex();
        vectors.push_back(std::move(v));
      }
      const Subspace s = Subspace::span(vectors, 3);
      CHECK(s == s);
      // two recomputations agree (symmetric + transitive through canonicity)
      const Subspace again = Subspace::span(vectors, 3);
      CHECK(again == s);
      CHECK(s == again);
    }
  }
}
