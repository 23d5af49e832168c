#include "bta/examples.hpp"

#include "bta/algebras.hpp"
#include "bta/errors.hpp"

namespace bta {

SchurShape example_shape() { return {2, 1}; }

namespace {

SchurElement coordinate_element(std::size_t m) {
  Vec unit(example_shape().element_dim());
  unit[m] = ComplexRational(1);
  return SchurElement::from_coords(example_shape(), unit);
}

SchurElement radical_column(const Rational& top, const Rational& bottom) {
  DenseMatrix corner(2, 1);
  corner(0, 0) = ComplexRational(top);
  corner(1, 0) = ComplexRational(bottom);
  return {example_shape(), ComplexRational(0), std::move(corner)};
}

}  // namespace

std::vector<BlockToeplitz> example1_displayed_generators() {
  std::vector<BlockToeplitz> gens;
  for (std::size_t m = 0; m < example_shape().element_dim(); ++m) {
    gens.push_back(
        BlockToeplitz::single_diagonal(kExampleOrder, 0, coordinate_element(m)));
  }
  return gens;
}

std::vector<BlockToeplitz> example1_defined_generators() {
  std::vector<BlockToeplitz> gens;
  for (int j : {0, -1, -2}) {
    for (std::size_t m = 0; m < example_shape().element_dim(); ++m) {
      gens.push_back(
          BlockToeplitz::single_diagonal(kExampleOrder, j, coordinate_element(m)));
    }
  }
  return gens;
}

std::vector<BlockToeplitz> example2_generators(const Rational& mu) {
  if (mu == 0) throw Error("example 2 requires mu != 0");
  const ComplexRational scale{mu};
  std::vector<BlockToeplitz> gens;
  for (std::size_t m = 0; m < example_shape().element_dim(); ++m) {
    const SchurElement e = coordinate_element(m);
    // free diagonals 0, -1, -2; the relations T_1 = mu T_{-2} and
    // T_2 = mu T_{-1} fill in the rest
    gens.push_back(BlockToeplitz::single_diagonal(kExampleOrder, 0, e));
    gens.push_back(BlockToeplitz(kExampleOrder, example_shape(),
                                 {{-1, e}, {2, scale * e}}));
    gens.push_back(BlockToeplitz(kExampleOrder, example_shape(),
                                 {{-2, e}, {1, scale * e}}));
  }
  return gens;
}

std::vector<BlockToeplitz> example3_generators(const ExampleParams& params) {
  std::vector<BlockToeplitz> gens;
  gens.push_back(BlockToeplitz(
      kExampleOrder, example_shape(),
      {{0, SchurElement::scalar(example_shape(), ComplexRational(params.lambda))},
       {1, radical_column(params.a, params.b)},
       {2, radical_column(params.c, params.d)},
       {-1, radical_column(Rational(1), Rational(0))},
       {-2, radical_column(Rational(0), Rational(1))}}));
  for (const BlockToeplitz& e : special_basis(kExampleOrder, example_shape())
                                    .basis_elements()) {
    gens.push_back(e);
  }
  return gens;
}

}  // namespace bta
