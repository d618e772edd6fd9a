#include <doctest.h>

#include "cofrob/frobenius.hpp"
#include "cofrob/io.hpp"
#include "cofrob/zoo.hpp"

using namespace cofrob;
using io::json;

namespace {

const FieldSpec q = FieldSpec::rationals();
const FieldSpec f5 = FieldSpec::prime(5);

}  // namespace

TEST_CASE("field round trip") {
  for (const FieldSpec& f : {q, f5}) {
    json j = io::field_to_json(f);
    CHECK(io::field_from_json(j) == f);
  }
  CHECK_THROWS_AS(io::field_from_json(json{{"kind", "real"}}), io::ParseError);
}

TEST_CASE("matrix round trip preserves exact entries") {
  Matrix m(2, 3, q);
  m.at(0, 0) = Scalar::parse(q, "1/3");
  m.at(1, 2) = Scalar::parse(q, "-7/2");
  json j = io::matrix_to_json(m);
  CHECK(io::matrix_from_json(j, q, "m") == m);
  CHECK(j[0][0].get<std::string>() == m.at(0, 0).to_string());
  // ragged rows are rejected
  j[1].erase(2);
  CHECK_THROWS_AS(io::matrix_from_json(j, q, "m"), io::ParseError);
}

TEST_CASE("coalgebra, morphism and comodule round trips") {
  for (const FieldSpec& f : {q, f5}) {
    for (const Coalgebra& c :
         {zoo::dual_numbers(f), zoo::matrix_coalgebra(2, f),
          zoo::grouplike(3, f)}) {
      json j = io::coalgebra_to_json(c);
      Coalgebra back = io::coalgebra_from_json(j);
      CHECK(back.delta() == c.delta());
      CHECK(back.counit() == c.counit());
      CHECK(back.field() == c.field());
    }
    CoalgebraMorphism lam = zoo::set_map_extension({0, 1, 0}, 2, f);
    CoalgebraMorphism lam2 = io::morphism_from_json(io::morphism_to_json(lam));
    CHECK(lam2.matrix == lam.matrix);
    CHECK(lam2.source.delta() == lam.source.delta());

    Comodule m = cofree_comodule(zoo::dual_numbers(f), 2, Side::left);
    Comodule m2 = io::comodule_from_json(io::comodule_to_json(m));
    CHECK(m2.side() == m.side());
    CHECK(m2.coaction() == m.coaction());
  }
}

TEST_CASE("malformed documents raise ParseError") {
  json good = io::coalgebra_to_json(zoo::dual_numbers(q));
  json no_eps = good;
  no_eps.erase("epsilon");
  CHECK_THROWS_AS(io::coalgebra_from_json(no_eps), io::ParseError);
  json bad_index = good;
  bad_index["delta"][0][0] = 99;
  CHECK_THROWS_AS(io::coalgebra_from_json(bad_index), io::ParseError);
  json bad_scalar = good;
  bad_scalar["delta"][0][3] = "1/0";
  CHECK_THROWS_AS(io::coalgebra_from_json(bad_scalar), io::ParseError);
  CHECK_THROWS_AS(io::coalgebra_from_json(json::array()), io::ParseError);
}

TEST_CASE("canonical dump is deterministic") {
  json j = io::coalgebra_to_json(zoo::matrix_coalgebra(2, f5));
  CHECK(io::canonical_dump(j) == io::canonical_dump(j));
  CHECK(io::canonical_dump(j).back() == '\n');
  // hash is stable across identical extensions and differs otherwise
  CoalgebraMorphism a = zoo::trivial_extension(zoo::dual_numbers(q));
  CoalgebraMorphism b = zoo::trivial_extension(zoo::grouplike(2, q));
  CHECK(io::extension_hash(a) == io::extension_hash(a));
  CHECK(io::extension_hash(a) != io::extension_hash(b));
  CHECK(io::extension_hash(a).size() == 64);
}

TEST_CASE("certificate round trip and hash mismatch refusal") {
  Coalgebra c = zoo::grouplike(2, q);
  CoalgebraMorphism lam = CoalgebraMorphism::identity(c);
  Verdict v = check_frobenius_extension(lam, {});
  REQUIRE(v.kind == Verdict::Kind::yes);
  REQUIRE(v.certificate.has_value());
  json doc = io::certificate_to_json(lam, *v.certificate);
  FrobeniusCertificate back = io::certificate_from_json(doc, lam);
  CHECK(back.alpha == v.certificate->alpha);
  CHECK(back.beta == v.certificate->beta);
  CHECK(verify_certificate(lam, back));

  CoalgebraMorphism other =
      CoalgebraMorphism::identity(zoo::grouplike(3, q));
  CHECK_THROWS_AS(io::certificate_from_json(doc, other), io::ParseError);

  json truncated = doc;
  truncated.erase("beta");
  CHECK_THROWS_AS(io::certificate_from_json(truncated, lam), io::ParseError);
}

TEST_CASE("verdict documents carry route and certificate") {
  CoalgebraMorphism lam =
      zoo::trivial_extension(zoo::dual_of_square_zero_local(2, q));
  Verdict no = check_frobenius_extension(lam, {});
  json jn = io::verdict_to_json(no, lam);
  CHECK(jn["verdict"] == "no");
  CHECK(jn.contains("evidence"));

  CoalgebraMorphism id = CoalgebraMorphism::identity(zoo::dual_numbers(q));
  Verdict yes = check_frobenius_extension(id, {});
  json jy = io::verdict_to_json(yes, id);
  CHECK(jy["verdict"] == "yes");
  CHECK(jy.contains("certificate"));
  // emitted certificate re-parses and verifies
  FrobeniusCertificate cert = io::certificate_from_json(jy["certificate"], id);
  CHECK(verify_certificate(id, cert));
}
