#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofrob/affine_family.hpp"
#include "cofrob/coalgebra.hpp"
#include "cofrob/cotensor.hpp"

namespace cofrob {

/// Finite-dimensional associative unital algebra by structure constants.
/// The multiplication is stored as the matrix of mu : B (x) B -> B, so
/// column i*dim + j holds the coordinates of e_i * e_j.
class Algebra {
 public:
  Algebra(FieldSpec field, std::size_t dim, Matrix mult, Matrix unit);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& mult() const { return mult_; }  // dim x dim^2
  const Matrix& unit() const { return unit_; }  // dim x 1

  /// Matrix of x |-> e_i * x.
  Matrix left_mult(std::size_t i) const;
  /// Matrix of x |-> x * e_i.
  Matrix right_mult(std::size_t i) const;
  Matrix left_mult_by(const Matrix& v) const;
  Matrix right_mult_by(const Matrix& v) const;
  Matrix product(const Matrix& x, const Matrix& y) const;

  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && mult_ == o.mult_ &&
           unit_ == o.unit_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  Matrix mult_;
  Matrix unit_;
};

ValidationReport validate_algebra(const Algebra& a);

struct AlgebraMorphism {
  Algebra source;
  Algebra target;
  Matrix matrix;  // target-dim x source-dim

  AlgebraMorphism(Algebra src, Algebra tgt, Matrix m);
  static AlgebraMorphism identity(const Algebra& a);
};

ValidationReport validate_algebra_morphism(const AlgebraMorphism& phi);

/// Convolution dual: (c* . d*)(c) = c*(c_1) d*(c_2), unit eps.
Algebra dualize_coalgebra(const Coalgebra& c);
/// lambda : C -> D dualizes to lambda* : D* -> C* (the transpose).
AlgebraMorphism dualize_extension(const CoalgebraMorphism& lambda);

/// A space with left/right actions of algebras, given per basis element.
struct ModuleRep {
  std::optional<Algebra> left_over;
  std::optional<Algebra> right_over;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;   // one dim x dim matrix per left basis
  std::vector<Matrix> right_action;  // one dim x dim matrix per right basis

  static ModuleRep regular_bimodule(const Algebra& a);
  /// B as an A-bimodule along phi : A -> B.
  static ModuleRep restricted_bimodule(const AlgebraMorphism& phi);
};

ValidationReport validate_module(const ModuleRep& m);

/// Basis of bimodule morphisms M -> N (f(a.m) = a.f(m), f(m.a) = f(m).a).
HomSpace bimodule_hom_space(const ModuleRep& m, const ModuleRep& n);
/// Only the left constraints (left A-linear maps).
HomSpace left_module_hom_space(const ModuleRep& m, const ModuleRep& n);

/// B (x)_A B presented as a quotient of B (x) B. Coset representatives are
/// chosen by eliminating relation pivots in lexicographic order.
struct RingTensor {
  Algebra ambient;  // B
  std::size_t dim = 0;
  Matrix projection;  // dim x nB^2
  Matrix section;     // nB^2 x dim, projection * section = id
  Matrix induced_mult;                 // nB x dim, mu on representatives
  std::vector<Matrix> left_action;     // B-bimodule structure on the quotient
  std::vector<Matrix> right_action;

  Matrix left_mult_by(const Matrix& b) const;
  Matrix right_mult_by(const Matrix& b) const;
};

RingTensor ring_tensor(const AlgebraMorphism& phi);

struct RingFrobeniusWitness {
  Matrix frobenius_form;  // E : B -> A, nA x nB
  Matrix element;         // h in B (x)_A B, quotient coordinates
  RingTensor tensor;
};

struct RingVerdict {
  enum class Kind { yes, no, unknown };
  Kind kind = Kind::unknown;
  std::optional<RingFrobeniusWitness> witness;
  std::string evidence;  // "dim-mismatch" or "det-family-identically-zero"
  AffineFamilyResult family;
};

/// Decides whether phi : A -> B is a Frobenius extension of rings via the
/// determinant family of E |-> (b |-> E((-) b)) over the A-bimodule hom
/// space; a Yes replays both dual-bases identities exactly.
RingVerdict check_frobenius_ring_extension(const AlgebraMorphism& phi,
                                           const AffineFamilyConfig& cfg = {});

struct DualCotensorIsoReport {
  RingTensor tensor;      // C* (x)_{D*} C*
  CotensorSpace cotensor; // C box_D C
  Matrix pi;              // cotensor-dim x tensor-dim
  bool dimensions_equal = false;
  bool full_rank = false;
  bool bimodule_morphism = false;
};

/// pi : C* (x)_{D*} C* -> (C box_D C)*, checked bijective and a
/// C*-bimodule morphism.
DualCotensorIsoReport dual_cotensor_iso(const CoalgebraMorphism& lambda);

struct DualHomIsoReport {
  HomSpace comodule_side;  // D-bicomodule maps D -> C
  HomSpace module_side;    // D*-bimodule maps C* -> D*
  bool transposes_in_target = false;
  bool bijective = false;
};

/// Phi(alpha) = alpha^T, a bijection between the two hom spaces.
DualHomIsoReport dual_hom_iso(const CoalgebraMorphism& lambda);

/// The bicomodule dual of a bicomodule: actions of the convolution duals on
/// the dual space.
ModuleRep dual_bimodule(const Bicomodule& m);

}  // namespace cofrob
