#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cofrob/matrix.hpp"

namespace cofrob {

struct Violation {
  std::string identity;
  std::size_t basis_index;
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
  void fail(const std::string& identity, std::size_t index) {
    pass = false;
    violations.push_back({identity, index});
  }
};

/// Finite-dimensional coalgebra in a fixed basis. The comultiplication is
/// stored as the matrix of Delta : C -> C (x) C with the tensor basis
/// ordered lexicographically (left factor major): e_j (x) e_k |-> j*dim + k.
class Coalgebra {
 public:
  Coalgebra(FieldSpec field, std::size_t dim, Matrix delta, Matrix counit,
            std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& delta() const { return delta_; }    // (dim*dim) x dim
  const Matrix& counit() const { return counit_; }  // 1 x dim
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Coalgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && delta_ == o.delta_ &&
           counit_ == o.counit_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  Matrix delta_;
  Matrix counit_;
  std::vector<std::string> labels_;
};

ValidationReport validate_coalgebra(const Coalgebra& c);

struct CoalgebraMorphism {
  Coalgebra source;
  Coalgebra target;
  Matrix matrix;  // target-dim x source-dim

  CoalgebraMorphism(Coalgebra src, Coalgebra tgt, Matrix m);
  static CoalgebraMorphism identity(const Coalgebra& c);
};

ValidationReport validate_morphism(const CoalgebraMorphism& lambda);

/// Requires the morphism identities to hold; throws otherwise. Constructors
/// of downstream objects use this so invalid data cannot propagate.
void require_valid(const CoalgebraMorphism& lambda);

enum class Side { left, right };

/// Comodule over a coalgebra. Right coaction rho : M -> M (x) C uses index
/// j*dim(C) + k for m_j (x) c_k; left coaction rho : M -> C (x) M uses
/// k*dim(M) + j for c_k (x) m_j.
class Comodule {
 public:
  Comodule(Side side, Coalgebra over, std::size_t dim, Matrix coaction);

  Side side() const { return side_; }
  const Coalgebra& over() const { return over_; }
  std::size_t dim() const { return dim_; }
  const Matrix& coaction() const { return coaction_; }
  const FieldSpec& field() const { return over_.field(); }

 private:
  Side side_;
  Coalgebra over_;
  std::size_t dim_;
  Matrix coaction_;
};

ValidationReport validate_comodule(const Comodule& m);
void require_valid(const Comodule& m);

/// The regular comodule: C over itself via Delta.
Comodule regular_comodule(const Coalgebra& c, Side side);
/// Cofree comodule M (x) C (right) or C (x) M (left) on an m-dimensional
/// space.
Comodule cofree_comodule(const Coalgebra& c, std::size_t m, Side side);

/// Corestriction along lambda : C -> D; keeps the underlying space, the
/// coaction becomes (M (x) lambda) o rho (right) or (lambda (x) M) o rho.
Comodule corestrict(const Comodule& m, const CoalgebraMorphism& lambda);

/// One space with a left coaction over `left_over` and a right coaction
/// over `right_over`, with the compatibility law between them.
class Bicomodule {
 public:
  Bicomodule(Coalgebra left_over, Coalgebra right_over, std::size_t dim,
             Matrix left_coaction, Matrix right_coaction);

  const Coalgebra& left_over() const { return left_over_; }
  const Coalgebra& right_over() const { return right_over_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left_coaction() const { return left_coaction_; }
  const Matrix& right_coaction() const { return right_coaction_; }

  Comodule left_part() const {
    return Comodule(Side::left, left_over_, dim_, left_coaction_);
  }
  Comodule right_part() const {
    return Comodule(Side::right, right_over_, dim_, right_coaction_);
  }

 private:
  Coalgebra left_over_, right_over_;
  std::size_t dim_;
  Matrix left_coaction_, right_coaction_;
};

ValidationReport validate_bicomodule(const Bicomodule& m);

/// C as a D-bicomodule via lambda : C -> D (coactions corestricted from
/// the regular ones).
Bicomodule coalgebra_as_bicomodule(const CoalgebraMorphism& lambda);
/// C as a (D, C)-bicomodule: left coaction (lambda (x) id) o Delta, right
/// coaction Delta.
Bicomodule mixed_bicomodule(const CoalgebraMorphism& lambda);

/// A basis of the solution space of a morphism-constraint linear system;
/// each basis element is the matrix of one morphism.
struct HomSpace {
  std::string description;
  std::size_t out_dim = 0, in_dim = 0;
  std::vector<Matrix> basis;

  std::size_t dimension() const { return basis.size(); }
  /// Stacked vec-columns of the basis, (out*in) x dimension.
  Matrix basis_matrix(const FieldSpec& field) const;
  bool contains(const Matrix& f, const FieldSpec& field) const;
};

/// Generic constraint solver: all f (out_dim x in_dim) with residual(f) = 0
/// for every residual map (each linear in f).
HomSpace solve_hom(
    std::size_t out_dim, std::size_t in_dim, const FieldSpec& field,
    const std::vector<std::function<Matrix(const Matrix&)>>& residuals,
    std::string description);

enum class HomKind { right_comodule, left_comodule, bicomodule };

HomSpace hom_space(const Comodule& m, const Comodule& n);
HomSpace hom_space(const Bicomodule& m, const Bicomodule& n);

/// Splitting test: M is injective iff the coaction embedding into the
/// cofree comodule splits by a comodule morphism.
bool is_injective_comodule(const Comodule& m);

}  // namespace cofrob
