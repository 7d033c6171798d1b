#pragma once

// R-matrices of weak Hopf algebras.

#include <memory>

#include "whakit/report.hpp"
#include "whakit/tensor.hpp"
#include "whakit/weak_hopf.hpp"

namespace whakit {

struct RCertification;

class RMatrix {
 public:
  RMatrix(AlgebraPtr algebra, Tensor r, Tensor r_bar);

  const AlgebraPtr& algebra() const { return algebra_; }
  const WeakHopfAlgebra& H() const { return *algebra_; }
  const Tensor& r() const { return r_; }
  const Tensor& r_bar() const { return r_bar_; }
  bool certified() const { return certified_; }

 private:
  friend std::shared_ptr<const RMatrix> certify_r(std::shared_ptr<RMatrix> r);
  friend RCertification try_certify_r(AlgebraPtr algebra, Tensor r, Tensor r_bar);

  AlgebraPtr algebra_;
  Tensor r_;
  Tensor r_bar_;
  bool certified_ = false;
};

using RMatrixPtr = std::shared_ptr<const RMatrix>;

/// Axioms of a quasitriangular structure with weak inverse r_bar; also records
/// the `triangular` flag.
Report check_quasitriangular(const RMatrix& r);
/// Consequences of the axioms; failures are marked internal.
Report check_derived_r_identities(const RMatrix& r);
RMatrixPtr certify_r(std::shared_ptr<RMatrix> r);
RMatrixPtr certify_r(AlgebraPtr algebra, Tensor r, Tensor r_bar);
/// Like certify_r, but hands back the report; `r` is null on failure.
struct RCertification {
  RMatrixPtr r;
  Report report;
};
RCertification try_certify_r(AlgebraPtr algebra, Tensor r, Tensor r_bar);
void require_certified(const RMatrix& r);
bool is_triangular(const RMatrix& r);

/// Solves for the weak inverse of r from RR' = Delta^op(1), R'R = Delta(1),
/// R' in Delta(1)(H(x)H)Delta^cop(1).  Returns nothing if unsolvable.
std::optional<Tensor> solve_r_bar(const WeakHopfAlgebra& h, const Tensor& r);

// Leg embeddings of a two-leg tensor into H^{(x)3}.
Tensor leg12(const WeakHopfAlgebra& h, const Tensor& r);
Tensor leg13(const WeakHopfAlgebra& h, const Tensor& r);
Tensor leg23(const WeakHopfAlgebra& h, const Tensor& r);
Tensor flip(const Tensor& t);

}  // namespace whakit
