#pragma once

// The transmuted braided Hopf algebra _R H living on the centralizer
// C_H(H_s) = { 1_1 h S(1_2) }, as a Hopf algebra in the category of H-modules:
//   mult   a (x)_t b -> (1_1 |> a)(1_2 |> b)
//   comult x -> x_1 S(R^2) (x) R^1 |> x_2
//   counit eps_t,  unit the inclusion of H_t
//   S      x -> R^2 R'^2 S(R^1 x S(R'^1))
// where |> is the adjoint action h |> x = h_1 x S(h_2).

#include <memory>

#include "whakit/module_cat.hpp"
#include "whakit/quasitriangular.hpp"
#include "whakit/report.hpp"

namespace whakit {

struct BraidedHopfAlgebra {
  RMatrixPtr base;
  Subspace carrier;        // C_H(H_s) inside H
  ModulePtr module;        // adjoint action, carrier coordinates
  ModulePtr unit_module;   // H_t
  TruncatedTensor square;  // module (x)_t module
  LinMap mult_full;        // dim x dim^2 on the untruncated square
  LinMap mult_bar;         // dim x dim(square)
  LinMap unit_bar;         // dim x dim(H_t)
  LinMap comult_full;      // dim^2 x dim
  LinMap comult_bar;       // dim(square) x dim
  LinMap counit_bar;       // dim(H_t) x dim
  LinMap antipode_bar;     // dim x dim

  const WeakHopfAlgebra& H() const { return base->H(); }
  const RMatrix& R() const { return *base; }
  std::size_t dim() const { return carrier.dim(); }
  const std::vector<std::string>& labels() const { return module->labels(); }
  /// Unit element 1_H in carrier coordinates.
  SparseVec one() const;
};

using BraidedPtr = std::shared_ptr<const BraidedHopfAlgebra>;

/// span{1_1 e_i S(1_2)}, checked to commute with H_s and to be a subalgebra.
Subspace centralizer_subalgebra(const WeakHopfAlgebra& h);
/// Throws ComultiplicationEscapesCarrier if the comultiplication leaves the
/// truncated square.
BraidedPtr transmute(const RMatrixPtr& r);

Report check_braided_hopf(const BraidedHopfAlgebra& b);
/// tau_{B,B} o comult = comult, with tau the half-braiding
/// h (x) m -> r^2 R^1 . m (x) r^1 h R^2 (a concrete stand-in for braided
/// cocommutativity; it makes no claim beyond this identity).
Report check_cocommutative_surrogate(const BraidedHopfAlgebra& b);

/// Half-braiding tau on the carrier of B (x)_t M, valued in ambient M (x) B.
/// Throws CoactionEscapesCarrier if the B leg leaves the carrier.
LinMap half_braiding_tau(const BraidedHopfAlgebra& b, const TruncatedTensor& bm);

// Leg operations on tensors whose legs are carrier coordinates of B.
Tensor b_mul(const BraidedHopfAlgebra& b, const Tensor& t, std::size_t x, std::size_t y);
Tensor b_comul(const BraidedHopfAlgebra& b, const Tensor& t, std::size_t leg);

/// Element of H (x) H with both legs in the carrier, rewritten in carrier
/// coordinates; throws `escape` otherwise.
SparseVec to_carrier_pair(const BraidedHopfAlgebra& b, const Tensor& t, ErrorKind escape);

}  // namespace whakit
