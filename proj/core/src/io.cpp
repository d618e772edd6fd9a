#include "cofrob/io.hpp"

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

namespace cofrob::io {

json field_to_json(const FieldSpec& f) {
  json j;
  if (f.kind == FieldSpec::Kind::rationals) {
    j["kind"] = "rationals";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p;
  }
  return j;
}

namespace {

const json& require(const json& j, const char* key,
                    const std::string& context) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError("missing key '" + std::string(key) + "' in " + context);
  return j.at(key);
}

std::size_t require_index(const json& j, const std::string& context) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_string()) {
    try {
      return static_cast<std::size_t>(std::stoull(j.get<std::string>()));
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected a non-negative index in " + context);
}

Scalar require_scalar(const json& j, const FieldSpec& f,
                      const std::string& context) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
  } catch (const std::exception& e) {
    throw ParseError("bad scalar in " + context + ": " + e.what());
  }
  throw ParseError("expected an exact scalar string in " + context);
}

}  // namespace

FieldSpec field_from_json(const json& j) {
  std::string kind = require(j, "kind", "field").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") {
    std::uint64_t p = require(j, "p", "field").get<std::uint64_t>();
    try {
      return FieldSpec::prime(p);
    } catch (const std::exception& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field kind must be 'rationals' or 'prime'");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const FieldSpec& f,
                        const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": matrix must be an array");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols)
      throw ParseError(context + ": ragged matrix at row " +
                       std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = require_scalar(j.at(i).at(c), f,
                                  context + " entry (" + std::to_string(i) +
                                      "," + std::to_string(c) + ")");
  }
  return m;
}

json coalgebra_to_json(const Coalgebra& c) {
  json j;
  j["field"] = field_to_json(c.field());
  j["dim"] = c.dim();
  json delta = json::array();
  std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = c.delta().at(jj * n + k, i);
        if (!v.is_zero()) delta.push_back({i, jj, k, v.to_string()});
      }
  j["delta"] = std::move(delta);
  json eps = json::array();
  for (std::size_t i = 0; i < n; ++i)
    if (!c.counit().at(0, i).is_zero())
      eps.push_back({i, c.counit().at(0, i).to_string()});
  j["epsilon"] = std::move(eps);
  j["labels"] = c.labels();
  return j;
}

Coalgebra coalgebra_from_json(const json& j) {
  FieldSpec f = field_from_json(require(j, "field", "coalgebra"));
  std::size_t n = require_index(require(j, "dim", "coalgebra"), "dim");
  Matrix delta(n * n, n, f);
  const json& d = require(j, "delta", "coalgebra");
  if (!d.is_array()) throw ParseError("delta must be an array of entries");
  for (std::size_t e = 0; e < d.size(); ++e) {
    const json& entry = d.at(e);
    std::string ctx = "delta entry " + std::to_string(e);
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError(ctx + " must be [i, j, k, value]");
    std::size_t i = require_index(entry.at(0), ctx);
    std::size_t jj = require_index(entry.at(1), ctx);
    std::size_t k = require_index(entry.at(2), ctx);
    if (i >= n || jj >= n || k >= n)
      throw ParseError(ctx + ": index out of range");
    delta.at(jj * n + k, i) = require_scalar(entry.at(3), f, ctx);
  }
  Matrix eps(1, n, f);
  const json& ej = require(j, "epsilon", "coalgebra");
  if (!ej.is_array()) throw ParseError("epsilon must be an array of entries");
  for (std::size_t e = 0; e < ej.size(); ++e) {
    const json& entry = ej.at(e);
    std::string ctx = "epsilon entry " + std::to_string(e);
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError(ctx + " must be [i, value]");
    std::size_t i = require_index(entry.at(0), ctx);
    if (i >= n) throw ParseError(ctx + ": index out of range");
    eps.at(0, i) = require_scalar(entry.at(1), f, ctx);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (!labels.empty() && labels.size() != n)
      throw ParseError("labels length does not match dim");
  }
  return Coalgebra(f, n, std::move(delta), std::move(eps), std::move(labels));
}

json morphism_to_json(const CoalgebraMorphism& m) {
  json j;
  j["source"] = coalgebra_to_json(m.source);
  j["target"] = coalgebra_to_json(m.target);
  j["matrix"] = matrix_to_json(m.matrix);
  return j;
}

CoalgebraMorphism morphism_from_json(const json& j) {
  Coalgebra src = coalgebra_from_json(require(j, "source", "morphism"));
  Coalgebra tgt = coalgebra_from_json(require(j, "target", "morphism"));
  if (!(src.field() == tgt.field()))
    throw ParseError("morphism: source and target fields differ");
  Matrix m = matrix_from_json(require(j, "matrix", "morphism"), src.field(),
                              "morphism matrix");
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw ParseError("morphism matrix must be target-dim x source-dim");
  return CoalgebraMorphism(std::move(src), std::move(tgt), std::move(m));
}

json comodule_to_json(const Comodule& m) {
  json j;
  j["side"] = m.side() == Side::right ? "right" : "left";
  j["over"] = coalgebra_to_json(m.over());
  j["dim"] = m.dim();
  j["coaction"] = matrix_to_json(m.coaction());
  return j;
}

Comodule comodule_from_json(const json& j) {
  std::string side = require(j, "side", "comodule").get<std::string>();
  if (side != "left" && side != "right")
    throw ParseError("comodule side must be 'left' or 'right'");
  Coalgebra over = coalgebra_from_json(require(j, "over", "comodule"));
  std::size_t dim = require_index(require(j, "dim", "comodule"), "dim");
  Matrix co = matrix_from_json(require(j, "coaction", "comodule"),
                               over.field(), "coaction");
  if (co.rows() != dim * over.dim() || co.cols() != dim)
    throw ParseError("coaction must be (dim * dim C) x dim");
  return Comodule(side == "right" ? Side::right : Side::left, std::move(over),
                  dim, std::move(co));
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace

std::string extension_hash(const CoalgebraMorphism& lambda) {
  return sha256_hex(canonical_dump(morphism_to_json(lambda)));
}

json certificate_to_json(const CoalgebraMorphism& lambda,
                         const FrobeniusCertificate& cert) {
  json j;
  j["extension_hash"] = extension_hash(lambda);
  j["alpha"] = matrix_to_json(cert.alpha);
  j["beta"] = matrix_to_json(cert.beta);
  j["cotensor_basis"] = matrix_to_json(cert.cotensor.basis);
  j["provenance"] = cert.provenance;
  j["transcript"] = cert.transcript;
  return j;
}

FrobeniusCertificate certificate_from_json(const json& j,
                                           const CoalgebraMorphism& lambda) {
  std::string hash =
      require(j, "extension_hash", "certificate").get<std::string>();
  if (hash != extension_hash(lambda))
    throw ParseError("certificate was issued for a different extension");
  const FieldSpec& f = lambda.source.field();
  FrobeniusCertificate cert{
      matrix_from_json(require(j, "alpha", "certificate"), f, "alpha"),
      matrix_from_json(require(j, "beta", "certificate"), f, "beta"),
      extension_cotensor(lambda),
      j.value("provenance", std::string{}),
      {}};
  if (j.contains("transcript"))
    for (const auto& line : j.at("transcript"))
      cert.transcript.push_back(line.get<std::string>());

  Matrix stored = matrix_from_json(require(j, "cotensor_basis", "certificate"),
                                   f, "cotensor_basis");
  if (!(stored == cert.cotensor.basis)) {
    // re-express beta on the canonical kernel basis
    if (stored.rows() != cert.cotensor.ambient_dim ||
        stored.cols() != cert.cotensor.dim())
      throw ParseError("cotensor_basis has the wrong shape");
    Matrix t;
    try {
      t = cert.cotensor.coordinates(stored);
    } catch (const std::invalid_argument&) {
      throw ParseError("cotensor_basis is not a kernel basis");
    }
    auto sol = t.transpose().solve(cert.beta.transpose());
    if (!sol) throw ParseError("cotensor_basis is not invertible");
    cert.beta = sol->particular.transpose();
  }
  return cert;
}

json verdict_to_json(const Verdict& v, const CoalgebraMorphism& lambda) {
  json j;
  j["verdict"] = v.kind == Verdict::Kind::yes
                     ? "yes"
                     : v.kind == Verdict::Kind::no ? "no" : "unknown";
  j["route"] = v.provenance;
  if (!v.evidence.empty()) j["evidence"] = v.evidence;
  json fam;
  fam["route"] = v.family.route;
  fam["trials"] = v.family.trials;
  fam["seed"] = v.family.seed;
  fam["confidence"] = v.family.confidence;
  json params = json::array();
  for (const Scalar& s : v.family.params) params.push_back(s.to_string());
  fam["params"] = std::move(params);
  j["family"] = std::move(fam);
  if (v.certificate) j["certificate"] = certificate_to_json(lambda, *v.certificate);
  return j;
}

}  // namespace cofrob::io
