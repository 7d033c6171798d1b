#pragma once

// Comodule algebras over _RH inside H-modules, Galois maps, cotensor
// products, xi and the braided autoequivalence test, inverses and the group
// law on quantum commutative Galois objects.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whakit/yetter_drinfeld.hpp"

namespace whakit {

struct ComoduleAlgebra {
  std::string name;
  BraidedPtr base;
  ModulePtr module;
  LinMap mult;     // dim x dim^2 on ambient A (x) A, vanishing off A (x)_t A
  SparseVec unit;  // 1_A
  std::optional<LinMap> left;   // (dim B * dim) x dim, ambient B (x) A
  std::optional<LinMap> right;  // (dim * dim B) x dim, ambient A (x) B

  std::size_t dim() const { return module->dim(); }
  const std::vector<std::string>& labels() const { return module->labels(); }
  const WeakHopfAlgebra& H() const { return base->H(); }
  /// z -> z . 1_A on H_t (target coordinates).
  LinMap unit_map() const;
  RHComodule left_comodule() const;
};

using AlgebraObj = std::shared_ptr<const ComoduleAlgebra>;

/// Composes `mult` with the Delta(1)-projector of A (x) A.
AlgebraObj make_comodule_algebra(std::string name, BraidedPtr base, ModulePtr module, const LinMap& mult,
                                 SparseVec unit, std::optional<LinMap> left, std::optional<LinMap> right);

/// _RH itself with both coactions given by its comultiplication.
AlgebraObj rh_comodule_algebra(const BraidedPtr& b);

Report check_algebra_in_cat(const ComoduleAlgebra& a);
enum class Side { Left, Right };
Report check_comodule_algebra(const ComoduleAlgebra& a, Side side);
/// The two coactions commute.
Report check_bicomodule(const ComoduleAlgebra& a);

Subspace coinvariants(const ComoduleAlgebra& a, Side side);
bool coinvariants_trivial(const ComoduleAlgebra& a, Side side);

/// Right: A (x)_t A -> A (x)_t B, a (x) b -> a b_(0) (x) b_(1).
/// Left:  A (x)_t A -> B (x)_t A, a (x) b -> a_(-1) (x) a_(0) b.
LinMap galois_map_beta(const ComoduleAlgebra& a, Side side);
/// Beta bijective on both sides, trivial coinvariants on both sides and the
/// finite-dimensional flatness surrogate.
Report check_galois(const ComoduleAlgebra& a);
bool is_galois(const ComoduleAlgebra& a);

Report check_cocommutative(const ComoduleAlgebra& a);
Report check_quantum_commutative(const ComoduleAlgebra& a);
bool is_cocommutative(const ComoduleAlgebra& a);
bool is_quantum_commutative(const ComoduleAlgebra& a);

struct Cotensor {
  Subspace space;  // inside ambient M (x) N
  ModulePtr module;
  std::optional<RHComodule> comodule;  // inherited from the left coaction of M
};

/// Equalizer of rho^r (x) id and id (x) rho^l on M (x)_t N.
Cotensor cotensor(const ModulePtr& m, const LinMap& right, const std::optional<LinMap>& left, const RHComodule& n);
Cotensor cotensor(const ComoduleAlgebra& a, const RHComodule& n);

/// Ambient (A box M) (x) (A box N) -> A (x) M (x) N,
/// (a (x) m) (x) (b (x) n) -> a (R^2 . b) (x) R^1 . m (x) n.
LinMap xi_full(const ComoduleAlgebra& a, const Cotensor& am, const Cotensor& an, const HModule& m);
/// xi between carriers; throws XiNotBijective.
LinMap xi_iso(const ComoduleAlgebra& a, const RHComodule& m, const RHComodule& n);

/// xi o C~_{A box M, A box N} = (id (x) C~_{M,N}) o xi on the carrier.
std::optional<Witness> autoequivalence_witness(const ComoduleAlgebra& a, const RHComodule& m, const RHComodule& n);
Report check_autoequivalence_diagram(const ComoduleAlgebra& a, const std::vector<std::pair<RHComodule, RHComodule>>& pairs);

/// _RH box M -> M, b (x) m -> eps_t(b) . m, checked to be a comodule isomorphism.
Report check_identity_cotensor(const BraidedPtr& b, const std::vector<RHComodule>& samples);

/// A box M -> M for trivial comodules M, a (x) m -> eta^-1(a) . m.
Report check_trivializable(const ComoduleAlgebra& a, const std::vector<ModulePtr>& plain, std::uint64_t seed = 0);

/// A box B with the braided tensor product algebra, left coaction of A and
/// right coaction of B.
AlgebraObj cotensor_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b);
Report check_group_law(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

struct InverseObject {
  AlgebraObj algebra;
  Subspace embedding;  // inside ambient _RH (x) A
};

/// (_RH (x) A)^co inside _RH (x) A^op; throws InverseConstructionFailed.
InverseObject inverse_galois_object(const ComoduleAlgebra& a);
/// Certifies A^-1 and tests the candidate isomorphisms
///   A box A^-1 -> _RH,  a (x) h (x) b -> S(eta^-1((R^1 . a) b)) |> (R^2 |> h)
///   A^-1 box A -> _RH,  h (x) a (x) b -> S(eta^-1(a b)) |> h
/// as maps of bicomodule algebras.
Report check_inverse(const ComoduleAlgebra& a, const InverseObject& inv);

/// Control object over the Klein four-group with R = 1 (x) 1: the twisted
/// group algebra u^2 = v^2 = 1, uv = -vu with trivial action and both
/// coactions given by the grading.  It is a cocommutative bi-Galois object
/// that is not quantum commutative.
AlgebraObj twisted_klein_control(const BraidedPtr& b);

/// Full certification: algebra, both comodule-algebra structures, bicomodule,
/// Galois, cocommutative and quantum commutative.
Report certify_qc_galois(const ComoduleAlgebra& a);

}  // namespace whakit
