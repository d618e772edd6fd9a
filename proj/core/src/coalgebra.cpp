#include "cofrob/coalgebra.hpp"

#include <stdexcept>

namespace cofrob {

namespace {

bool columns_equal(const Matrix& a, const Matrix& b, std::size_t j) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

void compare_columnwise(ValidationReport& rep, const Matrix& lhs,
                        const Matrix& rhs, const std::string& identity) {
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (!columns_equal(lhs, rhs, j)) rep.fail(identity, j);
}

}  // namespace

Coalgebra::Coalgebra(FieldSpec field, std::size_t dim, Matrix delta,
                     Matrix counit, std::vector<std::string> labels)
    : field_(field),
      dim_(dim),
      delta_(std::move(delta)),
      counit_(std::move(counit)),
      labels_(std::move(labels)) {
  if (delta_.rows() != dim * dim || delta_.cols() != dim)
    throw std::invalid_argument("coalgebra: delta shape mismatch");
  if (counit_.rows() != 1 || counit_.cols() != dim)
    throw std::invalid_argument("coalgebra: counit shape mismatch");
  if (!(delta_.field() == field_) || !(counit_.field() == field_))
    throw std::invalid_argument("coalgebra: field mismatch");
}

ValidationReport validate_coalgebra(const Coalgebra& c) {
  ValidationReport rep;
  std::size_t n = c.dim();
  Matrix id = Matrix::identity(n, c.field());
  compare_columnwise(rep, c.delta().kron(id) * c.delta(),
                     id.kron(c.delta()) * c.delta(), "coassociativity");
  compare_columnwise(rep, c.counit().kron(id) * c.delta(), id, "counit-left");
  compare_columnwise(rep, id.kron(c.counit()) * c.delta(), id, "counit-right");
  return rep;
}

CoalgebraMorphism::CoalgebraMorphism(Coalgebra src, Coalgebra tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw std::invalid_argument("coalgebra morphism: matrix shape mismatch");
  if (!(source.field() == target.field()))
    throw std::invalid_argument("coalgebra morphism: field mismatch");
}

CoalgebraMorphism CoalgebraMorphism::identity(const Coalgebra& c) {
  return CoalgebraMorphism(c, c, Matrix::identity(c.dim(), c.field()));
}

ValidationReport validate_morphism(const CoalgebraMorphism& lambda) {
  ValidationReport rep;
  const Matrix& l = lambda.matrix;
  compare_columnwise(rep, l.kron(l) * lambda.source.delta(),
                     lambda.target.delta() * l, "comultiplicativity");
  compare_columnwise(rep, lambda.target.counit() * l, lambda.source.counit(),
                     "counit-compatibility");
  return rep;
}

void require_valid(const CoalgebraMorphism& lambda) {
  if (!validate_morphism(lambda).pass)
    throw std::invalid_argument("invalid coalgebra morphism");
}

Comodule::Comodule(Side side, Coalgebra over, std::size_t dim, Matrix coaction)
    : side_(side),
      over_(std::move(over)),
      dim_(dim),
      coaction_(std::move(coaction)) {
  if (coaction_.rows() != dim * over_.dim() || coaction_.cols() != dim)
    throw std::invalid_argument("comodule: coaction shape mismatch");
}

ValidationReport validate_comodule(const Comodule& m) {
  ValidationReport rep;
  std::size_t d = m.over().dim();
  Matrix idm = Matrix::identity(m.dim(), m.field());
  Matrix idd = Matrix::identity(d, m.field());
  const Matrix& rho = m.coaction();
  if (m.side() == Side::right) {
    compare_columnwise(rep, rho.kron(idd) * rho,
                       idm.kron(m.over().delta()) * rho, "coassociativity");
    compare_columnwise(rep, idm.kron(m.over().counit()) * rho, idm,
                       "counit-law");
  } else {
    compare_columnwise(rep, idd.kron(rho) * rho,
                       m.over().delta().kron(idm) * rho, "coassociativity");
    compare_columnwise(rep, m.over().counit().kron(idm) * rho, idm,
                       "counit-law");
  }
  return rep;
}

void require_valid(const Comodule& m) {
  if (!validate_comodule(m).pass)
    throw std::invalid_argument("invalid comodule");
}

Comodule regular_comodule(const Coalgebra& c, Side side) {
  return Comodule(side, c, c.dim(), c.delta());
}

Comodule cofree_comodule(const Coalgebra& c, std::size_t m, Side side) {
  Matrix idm = Matrix::identity(m, c.field());
  if (side == Side::right)
    return Comodule(Side::right, c, m * c.dim(), idm.kron(c.delta()));
  return Comodule(Side::left, c, c.dim() * m, c.delta().kron(idm));
}

Comodule corestrict(const Comodule& m, const CoalgebraMorphism& lambda) {
  if (!(m.over() == lambda.source))
    throw std::invalid_argument("corestrict: coalgebra mismatch");
  Matrix idm = Matrix::identity(m.dim(), m.field());
  Matrix rho = m.side() == Side::right
                   ? idm.kron(lambda.matrix) * m.coaction()
                   : lambda.matrix.kron(idm) * m.coaction();
  return Comodule(m.side(), lambda.target, m.dim(), rho);
}

Bicomodule::Bicomodule(Coalgebra left_over, Coalgebra right_over,
                       std::size_t dim, Matrix left_coaction,
                       Matrix right_coaction)
    : left_over_(std::move(left_over)),
      right_over_(std::move(right_over)),
      dim_(dim),
      left_coaction_(std::move(left_coaction)),
      right_coaction_(std::move(right_coaction)) {
  if (left_coaction_.rows() != left_over_.dim() * dim ||
      left_coaction_.cols() != dim)
    throw std::invalid_argument("bicomodule: left coaction shape mismatch");
  if (right_coaction_.rows() != dim * right_over_.dim() ||
      right_coaction_.cols() != dim)
    throw std::invalid_argument("bicomodule: right coaction shape mismatch");
}

ValidationReport validate_bicomodule(const Bicomodule& m) {
  ValidationReport rep = validate_comodule(m.left_part());
  ValidationReport right = validate_comodule(m.right_part());
  for (const auto& v : right.violations)
    rep.fail("right-" + v.identity, v.basis_index);
  rep.pass = rep.pass && right.pass;
  Matrix idl = Matrix::identity(m.left_over().dim(), m.left_over().field());
  Matrix idr = Matrix::identity(m.right_over().dim(), m.right_over().field());
  compare_columnwise(rep, idl.kron(m.right_coaction()) * m.left_coaction(),
                     m.left_coaction().kron(idr) * m.right_coaction(),
                     "coaction-compatibility");
  return rep;
}

Bicomodule coalgebra_as_bicomodule(const CoalgebraMorphism& lambda) {
  const Coalgebra& c = lambda.source;
  Matrix id = Matrix::identity(c.dim(), c.field());
  return Bicomodule(lambda.target, lambda.target, c.dim(),
                    lambda.matrix.kron(id) * c.delta(),
                    id.kron(lambda.matrix) * c.delta());
}

Bicomodule mixed_bicomodule(const CoalgebraMorphism& lambda) {
  const Coalgebra& c = lambda.source;
  Matrix id = Matrix::identity(c.dim(), c.field());
  return Bicomodule(lambda.target, c, c.dim(),
                    lambda.matrix.kron(id) * c.delta(), c.delta());
}

Matrix HomSpace::basis_matrix(const FieldSpec& field) const {
  Matrix m(out_dim * in_dim, basis.size(), field);
  for (std::size_t j = 0; j < basis.size(); ++j) m.set_col(j, basis[j].vec());
  return m;
}

bool HomSpace::contains(const Matrix& f, const FieldSpec& field) const {
  if (f.rows() != out_dim || f.cols() != in_dim) return false;
  if (basis.empty()) return f.is_zero();
  return basis_matrix(field).spans(f.vec());
}

HomSpace solve_hom(
    std::size_t out_dim, std::size_t in_dim, const FieldSpec& field,
    const std::vector<std::function<Matrix(const Matrix&)>>& residuals,
    std::string description) {
  HomSpace hs;
  hs.description = std::move(description);
  hs.out_dim = out_dim;
  hs.in_dim = in_dim;
  std::size_t nf = out_dim * in_dim;
  if (nf == 0) return hs;

  // stack vec(residual(E_uv)) for every matrix unit E_uv
  std::vector<Matrix> cols;
  cols.reserve(nf);
  std::size_t total_rows = 0;
  for (std::size_t idx = 0; idx < nf; ++idx) {
    Matrix e(out_dim, in_dim, field);
    e.at(idx / in_dim, idx % in_dim) = Scalar::one(field);
    Matrix stacked(0, 1, field);
    for (const auto& r : residuals) stacked = stacked.vstack(r(e).vec());
    total_rows = stacked.rows();
    cols.push_back(stacked);
  }
  Matrix constraint(total_rows, nf, field);
  for (std::size_t j = 0; j < nf; ++j) constraint.set_col(j, cols[j]);
  Matrix ker = constraint.kernel();
  for (std::size_t j = 0; j < ker.cols(); ++j)
    hs.basis.push_back(Matrix::unvec(ker.col(j), out_dim, in_dim));
  return hs;
}

namespace {

std::function<Matrix(const Matrix&)> comodule_morphism_residual(
    const Comodule& m, const Comodule& n) {
  std::size_t d = m.over().dim();
  Matrix idd = Matrix::identity(d, m.field());
  Matrix rho_m = m.coaction(), rho_n = n.coaction();
  if (m.side() == Side::right)
    return [=](const Matrix& f) { return rho_n * f - f.kron(idd) * rho_m; };
  return [=](const Matrix& f) { return rho_n * f - idd.kron(f) * rho_m; };
}

}  // namespace

HomSpace hom_space(const Comodule& m, const Comodule& n) {
  if (m.side() != n.side() || !(m.over() == n.over()))
    throw std::invalid_argument("hom_space: comodule mismatch");
  std::string kind =
      m.side() == Side::right ? "right-comodule" : "left-comodule";
  return solve_hom(n.dim(), m.dim(), m.field(),
                   {comodule_morphism_residual(m, n)},
                   kind + " morphisms");
}

HomSpace hom_space(const Bicomodule& m, const Bicomodule& n) {
  if (!(m.left_over() == n.left_over()) ||
      !(m.right_over() == n.right_over()))
    throw std::invalid_argument("hom_space: bicomodule mismatch");
  return solve_hom(n.dim(), m.dim(), m.left_over().field(),
                   {comodule_morphism_residual(m.left_part(), n.left_part()),
                    comodule_morphism_residual(m.right_part(), n.right_part())},
                   "bicomodule morphisms");
}

bool is_injective_comodule(const Comodule& m) {
  const FieldSpec& f = m.field();
  std::size_t dim = m.dim();
  Comodule cofree = cofree_comodule(m.over(), dim, m.side());
  auto morphism_residual = comodule_morphism_residual(cofree, m);
  // sigma : cofree -> M comodule morphism with sigma o rho_M = id
  std::size_t nf = dim * cofree.dim();
  Matrix idm = Matrix::identity(dim, f);
  if (nf == 0) return true;
  std::vector<Matrix> cols;
  std::size_t total_rows = 0;
  for (std::size_t idx = 0; idx < nf; ++idx) {
    Matrix e(dim, cofree.dim(), f);
    e.at(idx / cofree.dim(), idx % cofree.dim()) = Scalar::one(f);
    Matrix col = morphism_residual(e).vec().vstack((e * m.coaction()).vec());
    total_rows = col.rows();
    cols.push_back(col);
  }
  Matrix constraint(total_rows, nf, f);
  for (std::size_t j = 0; j < nf; ++j) constraint.set_col(j, cols[j]);
  Matrix rhs =
      Matrix::zero(total_rows - dim * dim, 1, f).vstack(idm.vec());
  return constraint.solve(rhs).has_value();
}

}  // namespace cofrob
