#include <doctest.h>

#include "cofrob/dual.hpp"
#include "cofrob/zoo.hpp"

using namespace cofrob;

namespace {

const FieldSpec q = FieldSpec::rationals();

Matrix basis_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
  Matrix v(n, 1, f);
  v.at(i, 0) = Scalar::one(f);
  return v;
}

}  // namespace

TEST_CASE("dual of a grouplike coalgebra is the split product of fields") {
  Algebra a = dualize_coalgebra(zoo::grouplike(3, q));
  CHECK(validate_algebra(a).pass);
  // e_i* e_j* = [i = j] e_i* (convolution oracle by hand)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix p = a.product(basis_vec(3, i, q), basis_vec(3, j, q));
      if (i == j)
        CHECK(p == basis_vec(3, i, q));
      else
        CHECK(p.is_zero());
    }
  // unit is the sum of all idempotents (the transpose of eps)
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(a.unit().at(i, 0) == Scalar(q, 1));
}

TEST_CASE("dual of the dual-numbers coalgebra is K[x]/(x^2)") {
  Algebra a = dualize_coalgebra(zoo::dual_numbers(q));
  CHECK(validate_algebra(a).pass);
  Matrix g = basis_vec(2, 0, q), x = basis_vec(2, 1, q);
  CHECK(a.product(x, x).is_zero());
  CHECK(a.product(g, x) == x);
  CHECK(a.product(x, g) == x);
  CHECK(a.product(g, g) == g);
  CHECK(a.unit() == g);
}

TEST_CASE("dual of the square-zero coalgebra has a radical that squares "
          "to zero") {
  Algebra a = dualize_coalgebra(zoo::dual_of_square_zero_local(2, q));
  CHECK(validate_algebra(a).pass);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      CHECK(a.product(basis_vec(3, i, q), basis_vec(3, j, q)).is_zero());
}

TEST_CASE("a perturbed multiplication table fails validation") {
  Algebra a = dualize_coalgebra(zoo::grouplike(2, q));
  Matrix mult = a.mult();
  mult.at(0, 1) += Scalar(q, 1);
  CHECK_FALSE(validate_algebra(Algebra(q, 2, mult, a.unit())).pass);
}

TEST_CASE("dualized extensions are algebra morphisms") {
  zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, q), 2);
  AlgebraMorphism phi = dualize_extension(ds.lambda);
  CHECK(validate_algebra_morphism(phi).pass);
  CHECK(phi.matrix == ds.lambda.matrix.transpose());
}

TEST_CASE("module representations validate") {
  Algebra a = dualize_coalgebra(zoo::dual_numbers(q));
  CHECK(validate_module(ModuleRep::regular_bimodule(a)).pass);
  AlgebraMorphism phi =
      dualize_extension(zoo::trivial_extension(zoo::dual_numbers(q)));
  CHECK(validate_module(ModuleRep::restricted_bimodule(phi)).pass);
}

TEST_CASE("ring tensor over the identity collapses to the algebra itself") {
  Algebra b = dualize_coalgebra(zoo::grouplike(2, q));
  RingTensor rt = ring_tensor(AlgebraMorphism::identity(b));
  CHECK(rt.dim == b.dim());
  CHECK(rt.projection * rt.section == Matrix::identity(rt.dim, q));
}

TEST_CASE("ring tensor invariants: projection kills the balancing "
          "relations") {
  AlgebraMorphism phi =
      dualize_extension(zoo::trivial_extension(zoo::dual_numbers(q)));
  RingTensor rt = ring_tensor(phi);
  const Algebra& b = phi.target;
  std::size_t n = b.dim();
  CHECK(rt.projection * rt.section == Matrix::identity(rt.dim, q));
  // oracle: rebuild each relation and check the projection maps it to zero
  for (std::size_t ai = 0; ai < phi.source.dim(); ++ai) {
    Matrix img = phi.matrix.col(ai);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        Matrix eu = basis_vec(n, u, q), ev = basis_vec(n, v, q);
        Matrix rel = b.product(eu, img).kron(ev) -
                     eu.kron(b.product(img, ev));
        CHECK((rt.projection * rel).is_zero());
      }
  }
  // left and right actions agree with the ambient ones through the section
  Matrix idn = Matrix::identity(n, q);
  for (std::size_t x = 0; x < n; ++x) {
    CHECK(rt.left_action[x] ==
          rt.projection * b.left_mult(x).kron(idn) * rt.section);
    CHECK(rt.right_action[x] ==
          rt.projection * idn.kron(b.right_mult(x)) * rt.section);
  }
}

TEST_CASE("ring Frobenius check: split semisimple extension of the base "
          "field is Frobenius") {
  // unit map K -> K x K (dual of the two-point grouplike coalgebra)
  Algebra b = dualize_coalgebra(zoo::grouplike(2, q));
  Algebra k = dualize_coalgebra(zoo::trivial(q));
  AlgebraMorphism unit(k, b, b.unit());
  RingVerdict v = check_frobenius_ring_extension(unit);
  REQUIRE(v.kind == RingVerdict::Kind::yes);
  REQUIRE(v.witness.has_value());
  // replay the two-sided identity by hand: sum E(b h_i) g_i = b
  const RingTensor& rt = v.witness->tensor;
  const Matrix& e = v.witness->frobenius_form;
  Matrix h_ambient = rt.section * v.witness->element;
  Matrix h = Matrix::unvec(h_ambient, b.dim(), b.dim());
  for (std::size_t bi = 0; bi < b.dim(); ++bi) {
    Matrix acc(b.dim(), 1, q);
    for (std::size_t u = 0; u < b.dim(); ++u)
      for (std::size_t w = 0; w < b.dim(); ++w) {
        if (h.at(u, w).is_zero()) continue;
        Matrix ebu = b.product(basis_vec(b.dim(), bi, q),
                               basis_vec(b.dim(), u, q));
        Matrix scal = unit.matrix * (e * ebu);  // phi(E(b e_u))
        acc = acc + b.product(scal, basis_vec(b.dim(), w, q))
                        .scaled(h.at(u, w));
      }
    CHECK(acc == basis_vec(b.dim(), bi, q));
  }
}

TEST_CASE("ring Frobenius check: the local square-zero algebra is not "
          "Frobenius over K") {
  Algebra b = dualize_coalgebra(zoo::dual_of_square_zero_local(2, q));
  Algebra k = dualize_coalgebra(zoo::trivial(q));
  RingVerdict v = check_frobenius_ring_extension(AlgebraMorphism(k, b, b.unit()));
  CHECK(v.kind == RingVerdict::Kind::no);
  CHECK(v.evidence == "det-family-identically-zero");
}

TEST_CASE("ring Frobenius check: K[x]/(x^2) over K is Frobenius") {
  Algebra b = dualize_coalgebra(zoo::dual_numbers(q));
  Algebra k = dualize_coalgebra(zoo::trivial(q));
  RingVerdict v = check_frobenius_ring_extension(AlgebraMorphism(k, b, b.unit()));
  CHECK(v.kind == RingVerdict::Kind::yes);
}

TEST_CASE("dual cotensor comparison: pi is a bijective bimodule morphism") {
  for (const FieldSpec& f : {q, FieldSpec::prime(5)}) {
    zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, f), 2);
    DualCotensorIsoReport rep = dual_cotensor_iso(ds.lambda);
    CHECK(rep.dimensions_equal);
    CHECK(rep.full_rank);
    CHECK(rep.bimodule_morphism);
  }
}

TEST_CASE("dual hom comparison: transposition is a bijection of hom spaces") {
  zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, q), 2);
  DualHomIsoReport rep = dual_hom_iso(ds.lambda);
  CHECK(rep.transposes_in_target);
  CHECK(rep.bijective);
  CHECK(rep.comodule_side.dimension() == rep.module_side.dimension());

  CoalgebraMorphism eps = zoo::trivial_extension(zoo::dual_numbers(q));
  DualHomIsoReport rep2 = dual_hom_iso(eps);
  CHECK(rep2.transposes_in_target);
  CHECK(rep2.bijective);
}
