#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cofrob/matrix.hpp"

namespace cofrob {

struct AffineFamilyConfig {
  std::uint64_t budget = 1'000'000;  // determinant evaluations
  std::size_t symbolic_cap = 6;      // max parameter count for expansion
  std::uint64_t seed = 0;
};

/// Outcome of the determinant-family search for det(M0 + sum t_i M_i) != 0.
///
/// A witness always carries an exact nonzero determinant replay. NoneExists
/// is only produced by a completed deterministic route: a full grid
/// {0..n}^k over Q (degree <= n per parameter forces the zero polynomial),
/// full enumeration of F_p^k, or symbolic expansion. Unknown reports the
/// Schwartz-Zippel bound for the sampling that was done.
struct AffineFamilyResult {
  enum class Kind { witness, none_exists, unknown };
  Kind kind = Kind::unknown;
  std::vector<Scalar> params;
  std::string route;
  double confidence = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

AffineFamilyResult invertible_in_affine_family(
    const Matrix& m0, const std::vector<Matrix>& family,
    const AffineFamilyConfig& cfg = {});

}  // namespace cofrob
