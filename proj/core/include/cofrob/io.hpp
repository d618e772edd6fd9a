#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "cofrob/frobenius.hpp"

namespace cofrob::io {

using json = nlohmann::ordered_json;

/// Thrown on malformed documents; the message names the offending key or
/// location.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

/// Matrix as an array of rows of exact scalar strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldSpec& f,
                        const std::string& context);

/// {"field", "dim", "delta": [[i, j, k, value]...],
///  "epsilon": [[i, value]...], "labels"} with 0-based indices; delta
/// entry [i, j, k, v] is the coefficient of e_j (x) e_k in Delta(e_i).
json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);

/// {"source": coalgebra, "target": coalgebra, "matrix": rows} with the
/// matrix row-major, target-dim x source-dim.
json morphism_to_json(const CoalgebraMorphism& m);
CoalgebraMorphism morphism_from_json(const json& j);

/// {"side": "left"|"right", "over": coalgebra, "dim", "coaction": rows}.
json comodule_to_json(const Comodule& m);
Comodule comodule_from_json(const json& j);

/// Canonical byte form used for hashing and for all emitted documents.
std::string canonical_dump(const json& j);

/// SHA-256 of the canonical bytes of the extension document.
std::string extension_hash(const CoalgebraMorphism& lambda);

/// Certificate document; embeds the hash of the extension it certifies.
json certificate_to_json(const CoalgebraMorphism& lambda,
                         const FrobeniusCertificate& cert);
/// Re-parses a certificate against a concrete extension (the cotensor
/// basis is stored in the document). Throws ParseError on malformed input
/// or when the embedded hash does not match the extension.
FrobeniusCertificate certificate_from_json(const json& j,
                                           const CoalgebraMorphism& lambda);

json verdict_to_json(const Verdict& v, const CoalgebraMorphism& lambda);

}  // namespace cofrob::io
