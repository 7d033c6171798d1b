#pragma once

// The monoidal category of left H-modules with truncated tensor product
// M (x)_t N = Delta(1)(M (x) N), unit object H_t and the braiding from R.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "whakit/quasitriangular.hpp"
#include "whakit/report.hpp"
#include "whakit/weak_hopf.hpp"

namespace whakit {

class HModule {
 public:
  /// action[i] is the operator of the basis element e_i.
  HModule(AlgebraPtr h, VectorSpace space, std::vector<LinMap> action, std::string name = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const WeakHopfAlgebra& H() const { return *algebra_; }
  const std::string& name() const { return name_; }
  const VectorSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim; }
  const std::vector<std::string>& labels() const { return space_.labels; }

  const LinMap& rho(std::size_t i) const { return action_[i]; }
  const std::vector<LinMap>& action() const { return action_; }
  LinMap rho_of(const SparseVec& h) const;
  /// dim x (dim H * dim): column i*dim+m holds e_i . e_m.
  const LinMap& packed() const { return packed_; }
  SparseVec act(const SparseVec& h, const SparseVec& m) const;
  /// Acts with leg h_leg (an H leg) on leg m_leg; the result keeps m_leg's
  /// position among the remaining legs.
  Tensor act_leg(const Tensor& t, std::size_t h_leg, std::size_t m_leg) const;

 private:
  AlgebraPtr algebra_;
  VectorSpace space_;
  std::vector<LinMap> action_;
  LinMap packed_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const HModule>;

ModulePtr make_module(AlgebraPtr h, VectorSpace space, std::vector<LinMap> action, std::string name = {});
/// H acting on itself by left multiplication.
ModulePtr regular_module(const AlgebraPtr& h);
/// H_t (in target-subspace coordinates) with h . z = eps_t(h z).
ModulePtr unit_object(const AlgebraPtr& h);
/// The untruncated M (x) N with the diagonal action h_1 . m (x) h_2 . n.
ModulePtr ambient_tensor(const HModule& m, const HModule& n);
/// Restriction of M's action to an invariant subspace (coordinates of s).
ModulePtr submodule(const HModule& m, const Subspace& s, std::string name = {});

Report check_module(const HModule& m);
std::optional<Witness> h_linearity_witness(const LinMap& f, const HModule& m, const HModule& n);
bool is_h_linear(const LinMap& f, const HModule& m, const HModule& n);

/// Vectorized matrices f : M -> N, index row * dim(M) + col.
LinMap unflatten(const SparseVec& v, std::size_t rows, std::size_t cols);
SparseVec flatten(const LinMap& f);
/// Constraint map whose kernel is Hom_H(M, N) in flattened coordinates.
LinMap h_linearity_constraints(const HModule& m, const HModule& n);
/// Hom_H(M, N) as a subspace of flattened matrices.
Subspace hom_space(const HModule& m, const HModule& n);

/// h_1 . x_1 (x) h_2 . x_2 for x in M (x) N.
SparseVec diagonal_act(const HModule& m, const HModule& n, const SparseVec& h, const SparseVec& x);

struct TruncatedTensor {
  ModulePtr left;
  ModulePtr right;
  Subspace carrier;  // inside left (x) right
  ModulePtr module;  // carrier coordinates
};

TruncatedTensor truncated_tensor(const ModulePtr& m, const ModulePtr& n);
/// Image of the Delta^2(1)-action on M (x) N (x) P.
Subspace triple_carrier(const HModule& m, const HModule& n, const HModule& p);

/// Map between subspaces defined by an ambient formula: x -> proj_target(f(x)).
/// Throws `escape` if some f(x) leaves the target.
LinMap restrict_formula(const Subspace& source, const Subspace& target,
                        const std::function<SparseVec(const SparseVec&)>& f, ErrorKind escape,
                        const std::string& what);
/// Merges legs first and first+1 (spanning the ambient space of s) into
/// coordinates of s; throws `escape` if some slice leaves s.
Tensor legs_to_subspace(const Tensor& t, std::size_t first, const Subspace& s, ErrorKind escape,
                        const std::string& what);
/// Single leg into coordinates of s; throws `escape` if it leaves s.
Tensor leg_to_subspace(const Tensor& t, std::size_t leg, const Subspace& s, ErrorKind escape,
                       const std::string& what);
/// The identity subspace of an n-dimensional space.
Subspace whole_space(std::size_t n);

struct Iso {
  LinMap forward;
  LinMap inverse;
};

/// l : H_t (x)_t M -> M, z (x) m -> z . m, and its inverse m -> eps_t(1_1) (x) 1_2 . m.
/// `um` must be truncated_tensor(unit_object(H), M).
Iso left_unitor(const TruncatedTensor& um);
/// r : M (x)_t H_t -> M, m (x) z -> S(z) . m, and its inverse m -> 1_1 . m (x) 1_2.
/// `mu` must be truncated_tensor(M, unit_object(H)).
Iso right_unitor(const TruncatedTensor& mu);

/// Ambient braiding M (x) N -> N (x) M, m (x) n -> R^2 . n (x) R^1 . m.
LinMap braiding_full(const RMatrix& r, const HModule& m, const HModule& n);
/// Ambient N (x) M -> M (x) N, n (x) m -> Rbar^1 . m (x) Rbar^2 . n.
LinMap braiding_inverse_full(const RMatrix& r, const HModule& m, const HModule& n);
/// Braiding between carriers of M (x)_t N and N (x)_t M, with inverse.
Iso braiding_c(const RMatrix& r, const TruncatedTensor& mn, const TruncatedTensor& nm);

struct CoherenceOptions {
  std::uint64_t seed = 0;
  std::size_t morphisms = 3;
};

Report check_monoidal_coherence(const RMatrix& r, const std::vector<ModulePtr>& samples,
                                const CoherenceOptions& options = {});

}  // namespace whakit
