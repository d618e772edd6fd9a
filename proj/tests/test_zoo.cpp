#include <doctest.h>

#include "cofrob/zoo.hpp"

using namespace cofrob;

namespace {

const FieldSpec q = FieldSpec::rationals();
const FieldSpec f5 = FieldSpec::prime(5);

}  // namespace

TEST_CASE("every preset validates over Q and F_5") {
  for (const FieldSpec& f : {q, f5}) {
    CHECK(validate_coalgebra(zoo::trivial(f)).pass);
    for (std::size_t s : {1u, 2u, 4u})
      CHECK(validate_coalgebra(zoo::grouplike(s, f)).pass);
    for (std::size_t n : {1u, 2u})
      CHECK(validate_coalgebra(zoo::matrix_coalgebra(n, f)).pass);
    CHECK(validate_coalgebra(zoo::dual_numbers(f)).pass);
    for (std::size_t m : {1u, 2u, 3u})
      CHECK(validate_coalgebra(zoo::dual_of_square_zero_local(m, f)).pass);

    zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, f), 3);
    CHECK(validate_coalgebra(ds.c).pass);
    CHECK(validate_morphism(ds.lambda).pass);

    CHECK(validate_morphism(zoo::trivial_extension(zoo::dual_numbers(f))).pass);
    CHECK(validate_morphism(zoo::set_map_extension({0, 1, 0}, 2, f)).pass);
    CHECK(validate_comodule(zoo::grouplike_simple(zoo::grouplike(2, f), 1,
                                                  Side::right))
              .pass);
    for (const Comodule& m : zoo::sample_comodules(zoo::dual_numbers(f)))
      CHECK(validate_comodule(m).pass);
  }
}

TEST_CASE("direct sum injections and projections are sections of the fold") {
  zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::dual_numbers(q), 2);
  CHECK(validate_coalgebra(ds.c).pass);
  CHECK(validate_morphism(ds.lambda).pass);
  for (std::size_t i = 0; i < 2; ++i) {
    // lambda o sigma_i = id_D and p_i o sigma_i = id_D
    CHECK(ds.lambda.matrix * ds.sigma[i] ==
          Matrix::identity(ds.d.dim(), q));
    CHECK(ds.proj[i] * ds.sigma[i] == Matrix::identity(ds.d.dim(), q));
    // each injection is a coalgebra morphism
    CHECK(validate_morphism(CoalgebraMorphism(ds.d, ds.c, ds.sigma[i])).pass);
  }
}

TEST_CASE("direct sum comodule compatibility: corestriction equals the "
          "componentwise direct sum") {
  // build the canonical C-comodule on M = D (+) D from the regular
  // component comodules and corestrict it along the fold
  zoo::DirectSumCoring ds = zoo::direct_sum_coring(zoo::grouplike(2, q), 2);
  std::size_t nd = ds.d.dim();
  std::size_t dim = 2 * nd;
  Matrix rho_c(dim * ds.c.dim(), dim, q);
  Matrix rho_d(dim * nd, dim, q);
  Comodule reg = regular_comodule(ds.d, Side::right);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < nd; ++a)
      for (std::size_t b = 0; b < nd; ++b)
        for (std::size_t e = 0; e < nd; ++e) {
          const Scalar& v = reg.coaction().at(b * nd + e, a);
          if (v.is_zero()) continue;
          // component coaction lands in m_b (x) sigma_i(e) over C
          rho_c.at((i * nd + b) * ds.c.dim() + (i * nd + e), i * nd + a) = v;
          // direct-sum D-comodule: m_b (x) e
          rho_d.at((i * nd + b) * nd + e, i * nd + a) = v;
        }
  Comodule over_c(Side::right, ds.c, dim, rho_c);
  CHECK(validate_comodule(over_c).pass);
  Comodule restricted = corestrict(over_c, ds.lambda);
  CHECK(restricted.coaction() == rho_d);  // exact tensor equality
  CHECK(validate_comodule(Comodule(Side::right, ds.d, dim, rho_d)).pass);
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(zoo::grouplike(0, q), std::invalid_argument);
  CHECK_THROWS_AS(zoo::matrix_coalgebra(0, q), std::invalid_argument);
  CHECK_THROWS_AS(zoo::direct_sum_coring(zoo::trivial(q), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(zoo::set_map_extension({5}, 2, q), std::invalid_argument);
  CHECK_THROWS_AS(zoo::grouplike_simple(zoo::dual_numbers(q), 1, Side::right),
                  std::invalid_argument);
  CHECK_THROWS_AS(zoo::build("no-such-preset", {}, q), std::invalid_argument);
}

TEST_CASE("named bundles validate") {
  for (const std::string& name : zoo::preset_names()) {
    zoo::Bundle b = zoo::build(name, {}, q);
    for (const auto& [key, c] : b.coalgebras)
      CHECK(validate_coalgebra(c).pass);
    for (const auto& [key, m] : b.morphisms) CHECK(validate_morphism(m).pass);
    for (const auto& [key, m] : b.comodules) CHECK(validate_comodule(m).pass);
  }
}
