#include <doctest.h>

#include "cofrob/coalgebra.hpp"
#include "cofrob/zoo.hpp"

using namespace cofrob;

namespace {

const FieldSpec q = FieldSpec::rationals();
const FieldSpec f5 = FieldSpec::prime(5);

}  // namespace

TEST_CASE("zoo coalgebras satisfy the axioms over Q and F_5") {
  for (const FieldSpec& f : {q, f5}) {
    CHECK(validate_coalgebra(zoo::trivial(f)).pass);
    CHECK(validate_coalgebra(zoo::grouplike(3, f)).pass);
    CHECK(validate_coalgebra(zoo::matrix_coalgebra(2, f)).pass);
    CHECK(validate_coalgebra(zoo::dual_numbers(f)).pass);
    CHECK(validate_coalgebra(zoo::dual_of_square_zero_local(2, f)).pass);
  }
}

TEST_CASE("perturbed comultiplication is rejected with a located violation") {
  Coalgebra c = zoo::dual_numbers(q);
  Matrix delta = c.delta();
  delta.at(0 * 2 + 0, 1) += Scalar(q, 1);  // add g (x) g to Delta(x)
  Coalgebra bad(q, 2, delta, c.counit());
  ValidationReport rep = validate_coalgebra(bad);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("perturbed counit breaks the counit law at the right index") {
  Coalgebra c = zoo::grouplike(2, q);
  Matrix eps = c.counit();
  eps.at(0, 1) = Scalar(q, 2);
  ValidationReport rep = validate_coalgebra(Coalgebra(q, 2, c.delta(), eps));
  CHECK_FALSE(rep.pass);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.basis_index == 1) found = true;
  CHECK(found);
}

TEST_CASE("the fold morphism validates; a perturbed one does not") {
  zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, q), 2);
  CHECK(validate_morphism(ds.lambda).pass);
  Matrix m = ds.lambda.matrix;
  m.at(0, 1) += Scalar(q, 1);
  CHECK_FALSE(
      validate_morphism(CoalgebraMorphism(ds.c, ds.d, m)).pass);
}

TEST_CASE("regular, cofree and corestricted comodules validate") {
  for (const FieldSpec& f : {q, f5}) {
    Coalgebra c = zoo::dual_numbers(f);
    CHECK(validate_comodule(regular_comodule(c, Side::right)).pass);
    CHECK(validate_comodule(regular_comodule(c, Side::left)).pass);
    CHECK(validate_comodule(cofree_comodule(c, 3, Side::right)).pass);
    CHECK(validate_comodule(cofree_comodule(c, 3, Side::left)).pass);
    CoalgebraMorphism eps = zoo::trivial_extension(c);
    CHECK(validate_comodule(corestrict(regular_comodule(c, Side::right), eps))
              .pass);
  }
}

TEST_CASE("a perturbed coaction is rejected") {
  Coalgebra c = zoo::grouplike(2, q);
  Matrix rho = regular_comodule(c, Side::right).coaction();
  rho.at(0, 1) += Scalar(q, 1);
  CHECK_FALSE(validate_comodule(Comodule(Side::right, c, 2, rho)).pass);
}

TEST_CASE("bicomodule structures validate, including along an extension") {
  Coalgebra c = zoo::dual_numbers(q);
  CHECK(validate_bicomodule(Bicomodule(c, c, 2, c.delta(), c.delta())).pass);
  CoalgebraMorphism eps = zoo::trivial_extension(c);
  CHECK(validate_bicomodule(coalgebra_as_bicomodule(eps)).pass);
  CHECK(validate_bicomodule(mixed_bicomodule(eps)).pass);
}

TEST_CASE("comodule endomorphisms of a grouplike regular comodule are "
          "diagonal") {
  Coalgebra c = zoo::grouplike(3, q);
  Comodule reg = regular_comodule(c, Side::right);
  HomSpace hs = hom_space(reg, reg);
  CHECK(hs.dimension() == 3);
  for (const Matrix& b : hs.basis)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(b.at(i, j).is_zero());
}

TEST_CASE("hom space basis replays its defining constraints") {
  Coalgebra c = zoo::dual_numbers(q);
  Comodule reg = regular_comodule(c, Side::right);
  Comodule cof = cofree_comodule(c, 2, Side::right);
  HomSpace hs = hom_space(reg, cof);
  Matrix idc = Matrix::identity(c.dim(), q);
  for (const Matrix& fm : hs.basis)
    CHECK(cof.coaction() * fm == fm.kron(idc) * reg.coaction());
  // dimension oracle: maps C -> V (x) C correspond to linear maps C -> V
  CHECK(hs.dimension() == 2 * c.dim());
}

TEST_CASE("injectivity: cofree and regular yes, simple socle no") {
  Coalgebra c = zoo::dual_of_square_zero_local(2, q);
  CHECK(is_injective_comodule(cofree_comodule(c, 2, Side::right)));
  CHECK(is_injective_comodule(regular_comodule(c, Side::right)));
  CHECK_FALSE(is_injective_comodule(zoo::grouplike_simple(c, 0, Side::right)));
  Coalgebra d = zoo::dual_numbers(q);
  CHECK_FALSE(is_injective_comodule(zoo::grouplike_simple(d, 0, Side::right)));
  // over a grouplike (cosemisimple) coalgebra every comodule is injective
  Coalgebra g = zoo::grouplike(2, q);
  CHECK(is_injective_comodule(zoo::grouplike_simple(g, 1, Side::right)));
}
