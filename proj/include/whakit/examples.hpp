#pragma once

// Small presented algebras used throughout the tests and the CLI.

#include <optional>
#include <string>
#include <vector>

#include "whakit/quasitriangular.hpp"
#include "whakit/weak_hopf.hpp"

namespace whakit {

/// Structure constants plus an optional R-matrix and weak inverse, both as
/// flat vectors of H (x) H.
struct PresentedAlgebra {
  WeakHopfData algebra;
  std::optional<SparseVec> r;
  std::optional<SparseVec> r_bar;
};

struct CertifiedPair {
  AlgebraPtr h;
  RMatrixPtr r;  // null when no R-matrix was presented
};

/// Certifies the algebra and, if present, the R-matrix.
CertifiedPair certify_presented(const PresentedAlgebra& p);
/// Appends the certification reports; members are null past the first failure.
CertifiedPair certify_presented(const PresentedAlgebra& p, std::vector<Report>& reports);

/// Sweedler's four-dimensional Hopf algebra, basis 1, g, h, gh with g^2 = 1,
/// h^2 = 0, hg = -gh, and R = (1(x)1 + 1(x)g + g(x)1 - g(x)g)/2.
PresentedAlgebra sweedler();
/// Group algebra of Z_n over Q with R = 1 (x) 1.
PresentedAlgebra group_zn(unsigned n);
/// Group algebra of Z_2 x Z_2 over Q with R = 1 (x) 1.
PresentedAlgebra klein_four();

/// Catalog names: "sweedler", "group_zn:<n>", "klein", "face:<n>".
PresentedAlgebra catalog(const std::string& name);
bool in_catalog(const std::string& name);

/// Helper for presenting algebras: fills structure maps from callbacks on
/// basis indices.
WeakHopfData present(std::string name, Field field, VectorSpace space,
                     const std::function<SparseVec(std::size_t, std::size_t)>& mult, SparseVec unit,
                     const std::function<SparseVec(std::size_t)>& comult,
                     const std::function<Scalar(std::size_t)>& counit,
                     const std::function<SparseVec(std::size_t)>& antipode);

}  // namespace whakit
