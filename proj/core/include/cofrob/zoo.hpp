#pragma once

#include <map>
#include <string>
#include <vector>

#include "cofrob/coalgebra.hpp"

namespace cofrob::zoo {

/// The one-dimensional coalgebra K (Delta = id, eps = id).
Coalgebra trivial(const FieldSpec& f);

/// Grouplike coalgebra on s points: Delta g = g (x) g, eps g = 1.
Coalgebra grouplike(std::size_t s, const FieldSpec& f);

/// The n x n comatrix coalgebra: Delta e_ij = sum_k e_ik (x) e_kj,
/// eps e_ij = [i = j]. Dimension n^2.
Coalgebra matrix_coalgebra(std::size_t n, const FieldSpec& f);

/// Basis g, x with Delta x = g (x) x + x (x) g (dual of K[x]/(x^2)).
Coalgebra dual_numbers(const FieldSpec& f);

/// Basis g, x_1..x_m with Delta x_i = g (x) x_i + x_i (x) g: the dual of
/// the local algebra K[x_1..x_m]/(x_i x_j). Not Frobenius for m >= 2.
Coalgebra dual_of_square_zero_local(std::size_t m, const FieldSpec& f);

/// n disjoint copies of D with the fold map lambda(sigma_i(d)) = d,
/// the componentwise comultiplication, plus the canonical injections and
/// projections.
struct DirectSumCoring {
  Coalgebra c;  // D^(n)
  Coalgebra d;
  CoalgebraMorphism lambda;     // fold C -> D
  std::vector<Matrix> sigma;    // injections, dim C x dim D
  std::vector<Matrix> proj;     // projections, dim D x dim C
};
DirectSumCoring direct_sum_coring(const Coalgebra& d, std::size_t n);

/// eps_C : C -> K.
CoalgebraMorphism trivial_extension(const Coalgebra& c);

/// The morphism of grouplike coalgebras induced by a set map
/// {0..|fmap|-1} -> {0..tsize-1}.
CoalgebraMorphism set_map_extension(const std::vector<std::size_t>& fmap,
                                    std::size_t tsize, const FieldSpec& f);

/// The one-dimensional subcomodule spanned by the grouplike basis
/// element at `index` (requires Delta e = e (x) e for that element).
Comodule grouplike_simple(const Coalgebra& c, std::size_t index, Side side);

/// Standard right-comodule samples over c of small dimension: the
/// regular comodule, a cofree one, and every grouplike simple.
std::vector<Comodule> sample_comodules(const Coalgebra& c);

/// Named coalgebras, extensions and comodules built from one preset, for
/// the command-line interface. Throws std::invalid_argument on bad
/// parameters.
struct Bundle {
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, CoalgebraMorphism> morphisms;
  std::map<std::string, Comodule> comodules;
};
Bundle build(const std::string& preset, const std::vector<long>& params,
             const FieldSpec& f);

std::vector<std::string> preset_names();

}  // namespace cofrob::zoo
