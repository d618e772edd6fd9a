#pragma once

#include <optional>

#include "cofrob/coalgebra.hpp"

namespace cofrob {

/// Matrix of omega_{M,N} = rho_M (x) id - id (x) rho_N from M (x) N to
/// M (x) D (x) N, in the lexicographic product basis. M is a right
/// D-comodule, N a left D-comodule.
Matrix omega(const Comodule& m, const Comodule& n);

/// The cotensor product M box_D N realized as ker(omega) inside M (x) N.
/// When the right factor also carries a right coaction over another
/// coalgebra (it is a (D, C)-bicomodule), the induced right coaction on the
/// kernel is attached; symmetrically on the left.
struct CotensorSpace {
  std::size_t ambient_dim = 0;  // dim M * dim N
  Matrix basis;                 // ambient_dim x dim, columns span ker(omega)
  std::optional<Comodule> induced_right;
  std::optional<Comodule> induced_left;

  std::size_t dim() const { return basis.cols(); }
  /// Coordinates of an ambient vector that lies in the kernel; throws if
  /// the vector is outside.
  Matrix coordinates(const Matrix& ambient) const;
};

CotensorSpace cotensor(const Comodule& m, const Comodule& n);
/// As above, with the induced right coaction of `right_extra` (the right
/// coaction carried by N's underlying space over another coalgebra).
CotensorSpace cotensor(const Comodule& m, const Bicomodule& n);
/// Left factor carries the extra structure: M is a (C, D)-bicomodule.
CotensorSpace cotensor(const Bicomodule& m, const Comodule& n);
/// Both factors carry extra structure; both induced coactions attached.
CotensorSpace cotensor(const Bicomodule& m, const Bicomodule& n);

/// C box_D C for an extension lambda : C -> D, with both induced
/// C-coactions (a C-bicomodule).
CotensorSpace extension_cotensor(const CoalgebraMorphism& lambda);
Bicomodule cotensor_bicomodule(const CotensorSpace& sp);

/// The mutually inverse contraction isomorphisms D box_D C <-> C:
/// iota(d (x) c) = eps_D(d) c, inverse c |-> lambda(c_1) (x) c_2.
struct IotaPair {
  CotensorSpace space;  // D box_D C
  Matrix forward;       // dim C x dim(space)
  Matrix inverse;       // dim(space) x dim C
};

IotaPair iota(const CoalgebraMorphism& lambda);

/// The image subcoalgebra E = lambda(C) and the kernel-equality check
/// ker omega^D_{C,C} = ker omega^E_{C,C}.
struct ImageInvarianceReport {
  Coalgebra image;             // E with restricted Delta / eps
  CoalgebraMorphism corestriction;  // i : C -> E
  bool image_is_coalgebra = false;
  bool kernels_equal = false;
  std::size_t kernel_dim_d = 0;
  std::size_t kernel_dim_e = 0;
};

ImageInvarianceReport image_invariance(const CoalgebraMorphism& lambda);

}  // namespace cofrob
