#pragma once

// Yetter-Drinfeld modules over H, left comodules over _RH inside H-modules,
// the functors between them and the braidings on both sides.
//
//   F : rho^l  ->  rho^L(m) = m_(-1) R^2 (x) R^1 . m_(0)
//   G : rho^L  ->  rho^l(n) = n_[-1] S(R^2) (x) R^1 . n_[0]

#include <memory>
#include <vector>

#include "whakit/module_cat.hpp"
#include "whakit/transmutation.hpp"

namespace whakit {

struct YDModule {
  ModulePtr module;
  LinMap coaction;  // (dim H * dim) x dim, ambient H (x) M
};

struct RHComodule {
  BraidedPtr base;
  ModulePtr module;
  LinMap coaction;  // (dim B * dim) x dim, B in carrier coordinates
};

Report check_yd(const YDModule& m);
Report check_rh_comodule(const RHComodule& m);

/// rho^L(m) = R^2 (x) R^1 . m
YDModule induced_yd(const RMatrix& r, const ModulePtr& m);
/// Throws CoactionEscapesCarrier if the coaction leaves _RH.
RHComodule functor_G(const BraidedPtr& b, const YDModule& n);
YDModule functor_F(const RHComodule& m);

/// rho^l(m) = 1 (x)_t m
RHComodule trivial_comodule(const BraidedPtr& b, const ModulePtr& m);
/// _RH coacting on itself through its comultiplication.
RHComodule regular_comodule(const BraidedPtr& b);

struct ComoduleTensor {
  TruncatedTensor tensor;
  RHComodule comodule;  // on tensor.module
};

/// rho^l(u (x) v) = u_(-1)(R^2 |> v_(-1)) (x) R^1 . u_(0) (x) v_(0)
ComoduleTensor comodule_tensor(const RHComodule& u, const RHComodule& v);
/// rho^L(u (x) v) = u_[-1] v_[-1] (x) u_[0] (x) v_[0] on the truncated tensor.
YDModule yd_tensor(const YDModule& u, const YDModule& v, const TruncatedTensor& uv);

/// Ambient V (x) W -> W (x) V, v (x) w -> v_[-1] . w (x) v_[0].
LinMap yd_braiding_full(const YDModule& v, const HModule& w);
/// Ambient W (x) V -> V (x) W, w (x) v -> v_[0] (x) S^-1(v_[-1]) . w.
LinMap yd_braiding_inverse_full(const YDModule& v, const HModule& w);
/// Ambient U (x) V -> V (x) U, u (x) v -> u_(-1) R^2 . v (x) R^1 . u_(0).
LinMap comodule_braiding_full(const RHComodule& u, const HModule& v);
/// Ambient V (x) U -> U (x) V, v (x) u -> R^1 . u_(0) (x) S^-1(u_(-1) R^2) . v.
LinMap comodule_braiding_inverse_full(const RHComodule& u, const HModule& v);

/// Subspace of flattened maps U -> V that are H-linear and colinear.
Subspace comodule_hom_space(const RHComodule& u, const RHComodule& v);

/// The standard comodule samples: trivial(regular), trivial(H_t), regular _RH.
std::vector<RHComodule> standard_comodule_samples(const BraidedPtr& b);

Report check_equivalence_roundtrip(const BraidedPtr& b, const std::vector<RHComodule>& samples);

struct BraidingOptions {
  std::uint64_t seed = 0;
  std::size_t morphisms = 2;
};

Report check_comodule_braiding(const BraidedPtr& b, const std::vector<RHComodule>& samples,
                               const BraidingOptions& options = {});

}  // namespace whakit
