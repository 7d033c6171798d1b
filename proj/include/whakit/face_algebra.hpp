#pragma once

// Hayashi's face algebra H(N, w): basis X^i_j(s) for i, j, s in Z_N with
//   Delta(X^i_j(s)) = sum_{p+q=s} X^i_j(p) (x) X^{i+p}_{j+p}(q),  eps = delta_{s,0},
//   X^i_j(p) X^k_l(q) = delta_{jk} delta_{pq} X^i_l(p),  S(X^i_j(p)) = X^{j+p}_{i+p}(-p),
// over Q(w) with w a primitive N-th root of unity.

#include <cstddef>

#include <optional>

#include "whakit/examples.hpp"
#include "whakit/galois.hpp"

namespace whakit {

struct FaceIndex {
  unsigned n;
  std::size_t operator()(std::size_t i, std::size_t j, std::size_t s) const {
    return ((i % n) * n + (j % n)) * n + (s % n);
  }
  std::size_t dim() const { return std::size_t{n} * n * n; }
};

/// The face algebra with its R-matrix and weak inverse.
PresentedAlgebra face_algebra(unsigned n);

/// The transmuted structure on span{X^k_k(s)}, written down directly.
/// Carrier coordinate k*N + s stands for X^k_k(s).
struct TransmutationTables {
  unsigned n = 0;
  LinMap mult;      // N^2 x N^4: X^i_i(p) X^k_k(q) = d_ik d_pq X^i_i(p)
  LinMap comult;    // N^4 x N^2: X^k_k(s) -> sum_{w+q=s} X^k_k(w) (x) X^k_k(q)
  LinMap counit;    // N^3 x N^2, valued in H: eps_t(X^i_i(s)) = d_s0 1^i
  LinMap unit;      // N^2 x N from the basis 1^i = sum_p X^i_i(p)
  LinMap antipode;  // X^k_k(s) -> X^k_k(-s)
};

TransmutationTables expected_transmutation(unsigned n);

/// 1^i = sum_p X^i_i(p) in H.
SparseVec block_unit(unsigned n, std::size_t i);

/// The block H^i = span{X^i_i(p)} of the transmuted algebra as an ordinary
/// Hopf algebra over k = k 1^i, read off the transmuted structure maps.
/// Throws BlockDecompositionFailed if a structure map leaves the block.
WeakHopfData block_hopf_data(const BraidedHopfAlgebra& b, unsigned n, std::size_t i);

/// Transmutation tables, block decomposition of the carrier and of the
/// truncated square, Hopf axioms on each block and the block isomorphisms
/// X^i_i(p) -> X^j_j(p).
Report check_face_structure(unsigned n);

/// The block A^i = 1^i . A of a comodule algebra over a face algebra, with its
/// right H^i-coaction.
struct BlockGaloisObject {
  std::size_t component = 0;
  AlgebraPtr hopf;      // H^i
  Subspace embedding;   // A^i inside A
  LinMap mult;          // dim x dim^2
  SparseVec unit;
  LinMap coaction;      // (dim * N) x dim, ambient A^i (x) H^i
};

/// Throws BlockDecompositionFailed.
BlockGaloisObject omega_project(const ComoduleAlgebra& a, unsigned n, std::size_t i);
/// Ordinary Hopf-Galois axioms for a block.
Report check_block_galois(const BlockGaloisObject& g);

/// A' = k[u]/(u^N - a), Z_N-graded by u^m -> u^m (x) g_m with the group-likes
/// g_m = sum_p w^{mp} X^i_i(p) of H^i.
struct CocycleAlgebra {
  unsigned n = 0;
  Scalar a;
  LinMap mult;      // N x N^2 on the basis u^0..u^{N-1}
  LinMap coaction;  // N^2 x N, ambient A' (x) H^i
};

/// Throws ZeroParameter for a = 0.
CocycleAlgebra cocycle_algebra(unsigned n, const Scalar& a);

/// The direct sum of copies of A' over all blocks (transported from block i
/// along X^i_i(p) -> X^j_j(p)), with basis u_j^m at index j*N + m,
/// X^i_l(p) . u_j^m = d_p0 d_lj u_i^m, left coaction u_j^m -> g^(j)_m (x) u_j^m
/// and right coaction its image under tau.  Throws ZeroParameter.
AlgebraObj cocycle_galois_object(const BraidedPtr& b, unsigned n, std::size_t component, const Scalar& a);

/// omega_project(A_a, i) against the tables of A'.
Report check_omega_roundtrip(const BraidedPtr& b, unsigned n, std::size_t i, const Scalar& a);

/// N-th power of the degree-one generator u_A (x) u_B of A box B, as a
/// multiple of the block unit.  Throws GeneratorNotFound.
Scalar cocycle_group_probe(const ComoduleAlgebra& a, const ComoduleAlgebra& b, unsigned n);

/// True when a/b is the N-th power of a rational; nothing when undecided.
std::optional<bool> same_cocycle_class(const Scalar& a, const Scalar& b, unsigned n);

}  // namespace whakit
