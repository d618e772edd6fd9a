#include "cofrob/cotensor.hpp"

#include <stdexcept>

namespace cofrob {

Matrix omega(const Comodule& m, const Comodule& n) {
  if (m.side() != Side::right || n.side() != Side::left ||
      !(m.over() == n.over()))
    throw std::invalid_argument("omega: need a right and a left comodule over one coalgebra");
  Matrix idm = Matrix::identity(m.dim(), m.field());
  Matrix idn = Matrix::identity(n.dim(), n.field());
  return m.coaction().kron(idn) - idm.kron(n.coaction());
}

Matrix CotensorSpace::coordinates(const Matrix& ambient) const {
  auto sol = basis.solve(ambient);
  if (!sol) throw std::invalid_argument("vector outside the cotensor kernel");
  return sol->particular;
}

namespace {

Comodule induce_right(const CotensorSpace& sp, std::size_t mdim,
                      const Comodule& right_extra) {
  // ambient coaction id_M (x) rho on M (x) N lands in ker (x) C
  const Coalgebra& c = right_extra.over();
  Matrix idm = Matrix::identity(mdim, c.field());
  Matrix idc = Matrix::identity(c.dim(), c.field());
  Matrix ambient = idm.kron(right_extra.coaction()) * sp.basis;
  auto sol = sp.basis.kron(idc).solve(ambient);
  if (!sol)
    throw std::logic_error("induced right coaction does not preserve kernel");
  return Comodule(Side::right, c, sp.dim(), sol->particular);
}

Comodule induce_left(const CotensorSpace& sp, std::size_t ndim,
                     const Comodule& left_extra) {
  const Coalgebra& c = left_extra.over();
  Matrix idn = Matrix::identity(ndim, c.field());
  Matrix idc = Matrix::identity(c.dim(), c.field());
  Matrix ambient = left_extra.coaction().kron(idn) * sp.basis;
  auto sol = idc.kron(sp.basis).solve(ambient);
  if (!sol)
    throw std::logic_error("induced left coaction does not preserve kernel");
  return Comodule(Side::left, c, sp.dim(), sol->particular);
}

}  // namespace

CotensorSpace cotensor(const Comodule& m, const Comodule& n) {
  CotensorSpace sp;
  sp.ambient_dim = m.dim() * n.dim();
  sp.basis = omega(m, n).kernel();
  return sp;
}

CotensorSpace cotensor(const Comodule& m, const Bicomodule& n) {
  CotensorSpace sp = cotensor(m, n.left_part());
  sp.induced_right = induce_right(sp, m.dim(), n.right_part());
  return sp;
}

CotensorSpace cotensor(const Bicomodule& m, const Comodule& n) {
  CotensorSpace sp = cotensor(m.right_part(), n);
  sp.induced_left = induce_left(sp, n.dim(), m.left_part());
  return sp;
}

CotensorSpace cotensor(const Bicomodule& m, const Bicomodule& n) {
  CotensorSpace sp = cotensor(m.right_part(), n.left_part());
  sp.induced_right = induce_right(sp, m.dim(), n.right_part());
  sp.induced_left = induce_left(sp, n.dim(), m.left_part());
  return sp;
}

Bicomodule cotensor_bicomodule(const CotensorSpace& sp) {
  if (!sp.induced_left || !sp.induced_right)
    throw std::invalid_argument("cotensor space carries no bicomodule structure");
  return Bicomodule(sp.induced_left->over(), sp.induced_right->over(),
                    sp.dim(), sp.induced_left->coaction(),
                    sp.induced_right->coaction());
}

CotensorSpace extension_cotensor(const CoalgebraMorphism& lambda) {
  const Coalgebra& c = lambda.source;
  Matrix id = Matrix::identity(c.dim(), c.field());
  // C as a (C, D)-bicomodule and as a (D, C)-bicomodule
  Bicomodule left_factor(c, lambda.target, c.dim(), c.delta(),
                         id.kron(lambda.matrix) * c.delta());
  Bicomodule right_factor(lambda.target, c, c.dim(),
                          lambda.matrix.kron(id) * c.delta(), c.delta());
  return cotensor(left_factor, right_factor);
}

IotaPair iota(const CoalgebraMorphism& lambda) {
  const Coalgebra& c = lambda.source;
  const Coalgebra& d = lambda.target;
  Matrix idc = Matrix::identity(c.dim(), c.field());
  Bicomodule right_factor(d, c, c.dim(), lambda.matrix.kron(idc) * c.delta(),
                          c.delta());
  IotaPair p{cotensor(regular_comodule(d, Side::right), right_factor), {}, {}};
  p.forward = d.counit().kron(idc) * p.space.basis;
  Matrix inv_ambient = lambda.matrix.kron(idc) * c.delta();
  p.inverse = p.space.coordinates(inv_ambient);
  if (!(p.forward * p.inverse == idc) ||
      !(p.inverse * p.forward ==
        Matrix::identity(p.space.dim(), c.field())))
    throw std::logic_error("iota: contraction pair failed to invert");
  return p;
}

ImageInvarianceReport image_invariance(const CoalgebraMorphism& lambda) {
  const Coalgebra& c = lambda.source;
  const Coalgebra& d = lambda.target;
  const FieldSpec& f = c.field();

  // image basis: pivot columns of lambda
  Matrix r = lambda.matrix;
  std::vector<std::size_t> pivots = rref_in_place(r);
  Matrix j(d.dim(), pivots.size(), f);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    j.set_col(t, lambda.matrix.col(pivots[t]));

  auto delta_e = j.kron(j).solve(d.delta() * j);
  if (!delta_e)
    throw std::logic_error("image of a coalgebra morphism is not a subcoalgebra");
  Matrix eps_e = d.counit() * j;
  Coalgebra image(f, pivots.size(), delta_e->particular, eps_e);

  auto corestrict_mat = j.solve(lambda.matrix);
  CoalgebraMorphism i(c, image, corestrict_mat->particular);

  ImageInvarianceReport rep{image, i, validate_coalgebra(image).pass, false, 0,
                            0};

  auto kernel_over = [&](const CoalgebraMorphism& mor) {
    Comodule right = corestrict(regular_comodule(c, Side::right), mor);
    Comodule left = corestrict(regular_comodule(c, Side::left), mor);
    return omega(right, left).kernel();
  };
  Matrix kd = kernel_over(lambda);
  Matrix ke = kernel_over(i);
  rep.kernel_dim_d = kd.cols();
  rep.kernel_dim_e = ke.cols();
  rep.kernels_equal = kd.cols() == ke.cols() &&
                      kd.hstack(ke).rank() == kd.cols();
  return rep;
}

}  // namespace cofrob
