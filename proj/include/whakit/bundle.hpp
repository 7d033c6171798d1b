#pragma once

// JSON bundles for algebras, modules, comodule algebras and transmuted
// algebras.  Writers are canonical (fixed key order, entries sorted by index,
// canonical scalar strings), so parse followed by write is byte-stable.
//
// Entry conventions (0-based indices, scalars as strings):
//   mult            [i, j, k, s]   e_i e_j contains s e_k
//   comult          [i, j, k, s]   Delta(e_i) contains s e_j (x) e_k
//   unit, counit    [i, s]
//   antipode        [i, j, s]      S(e_i) contains s e_j
//   r_matrix        [i, j, s]      R contains s e_i (x) e_j
//   action          [h, row, col, s]
//   coaction_h      [m, h, n, s]   rho(e_m) contains s e_h (x) e_n
//   coaction_rh,
//   left_coaction   [m, b, n, s]   rho(e_m) contains s b_b (x) e_n
//   right_coaction  [m, n, b, s]   rho(e_m) contains s e_n (x) b_b

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whakit/examples.hpp"
#include "whakit/galois.hpp"

namespace whakit {

/// Reads a file; throws InvalidInput if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

PresentedAlgebra parse_algebra_bundle(std::string_view text);
std::string write_algebra_bundle(const PresentedAlgebra& p);

/// The `algebra` field of a module or comodule-algebra bundle.
std::string bundle_algebra_reference(std::string_view text);

/// What parsing a module-level bundle needs to know about its algebra.
struct BundleContext {
  Field field;
  std::size_t h_dim = 0;
  std::size_t rh_dim = 0;  // 0 when the algebra carries no R-matrix
};

struct ModuleBundle {
  std::string name;
  std::string algebra;  // catalog name or path of an algebra bundle
  VectorSpace space;
  std::vector<LinMap> action;
  std::optional<LinMap> coaction_h;   // (dim H * dim) x dim
  std::optional<LinMap> coaction_rh;  // (dim _RH * dim) x dim
};

ModuleBundle parse_module_bundle(std::string_view text, const BundleContext& ctx);
std::string write_module_bundle(const ModuleBundle& m);

struct ComoduleAlgebraBundle {
  ModuleBundle module;
  LinMap mult;
  SparseVec unit;
  std::optional<LinMap> left;
  std::optional<LinMap> right;
};

ComoduleAlgebraBundle parse_comodule_algebra_bundle(std::string_view text, const BundleContext& ctx);
std::string write_comodule_algebra_bundle(const ComoduleAlgebraBundle& a);

/// The transmuted algebra in carrier coordinates.
struct BraidedBundle {
  std::string name;
  std::string algebra;
  Field field;
  VectorSpace space;
  std::size_t h_dim = 0;
  LinMap carrier_inclusion;  // dim H x dim
  LinMap mult;               // on the untruncated square
  SparseVec unit;
  LinMap comult;
  LinMap counit;  // dim H x dim: eps_t in H coordinates
  LinMap antipode;
};

BraidedBundle braided_bundle(const BraidedHopfAlgebra& b, const std::string& algebra);
BraidedBundle parse_braided_bundle(std::string_view text);
std::string write_braided_bundle(const BraidedBundle& b);

/// Which kind of bundle a document is, judged by its fields.
enum class BundleKind { Algebra, Module, ComoduleAlgebra, Braided };
BundleKind detect_bundle_kind(std::string_view text);

struct ResolvedAlgebra {
  std::string reference;
  CertifiedPair pair;
  BraidedPtr braided;  // null without an R-matrix
  BundleContext context() const;
};

struct AlgebraSource {
  std::string reference;
  std::optional<std::filesystem::path> path;  // empty for catalog names
  PresentedAlgebra presented;
};

/// A catalog name ("face:3") or a path to an algebra bundle, relative to
/// `base_dir`.  Parses only; nothing is certified.
AlgebraSource load_algebra(const std::string& reference, const std::filesystem::path& base_dir);

/// load_algebra followed by certification and transmutation.  Throws
/// Uncertified if the algebra or its R-matrix fail.
ResolvedAlgebra resolve_algebra(const std::string& reference, const std::filesystem::path& base_dir);

ModulePtr to_module(const ModuleBundle& m, const AlgebraPtr& h);
ModuleBundle module_bundle(const HModule& m, const std::string& algebra, const std::optional<LinMap>& coaction_h = {},
                           const std::optional<LinMap>& coaction_rh = {});
AlgebraObj to_comodule_algebra(const ComoduleAlgebraBundle& a, const BraidedPtr& b);
ComoduleAlgebraBundle comodule_algebra_bundle(const ComoduleAlgebra& a, const std::string& algebra);

}  // namespace whakit
