#pragma once

// Weak Hopf algebras presented by structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whakit/linalg.hpp"
#include "whakit/report.hpp"
#include "whakit/tensor.hpp"

namespace whakit {

struct WeakHopfData {
  std::string name;
  Field field;
  VectorSpace space;
  LinMap mult;      // d x d^2, column i*d+j holds e_i e_j
  SparseVec unit;   // 1_H
  LinMap comult;    // d^2 x d
  LinMap counit;    // 1 x d
  LinMap antipode;  // d x d
  std::optional<LinMap> antipode_inverse;
};

struct Certification;

class WeakHopfAlgebra {
 public:
  /// Validates shapes only; axioms are checked by check_weak_hopf / certify.
  explicit WeakHopfAlgebra(WeakHopfData data);

  const WeakHopfData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.space.dim; }
  const std::vector<std::string>& labels() const { return data_.space.labels; }
  bool certified() const { return certified_; }

  const LinMap& mult_map() const { return data_.mult; }
  const LinMap& comult_map() const { return data_.comult; }
  const LinMap& counit_map() const { return data_.counit; }
  const LinMap& antipode_map() const { return data_.antipode; }
  /// Given inverse if present, otherwise computed; throws AntipodeNotInvertible.
  const LinMap& antipode_inverse_map() const;
  const LinMap& eps_t_map() const { return eps_t_; }
  const LinMap& eps_s_map() const { return eps_s_; }
  const SparseVec& one() const { return data_.unit; }
  /// Delta(1) as a two-leg tensor.
  const Tensor& delta_one() const { return delta_one_; }
  const Subspace& target() const { return target_; }
  const Subspace& source() const { return source_; }
  /// Left multiplication by e_i.
  const LinMap& left_mult(std::size_t i) const { return left_mult_[i]; }
  LinMap left_mult_by(const SparseVec& a) const;
  LinMap right_mult_by(const SparseVec& a) const;

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec comultiply(const SparseVec& a) const;
  Scalar counit(const SparseVec& a) const;
  SparseVec antipode(const SparseVec& a) const;
  SparseVec epsilon_t(const SparseVec& a) const { return eps_t_.apply(a); }
  SparseVec epsilon_s(const SparseVec& a) const { return eps_s_.apply(a); }

  // Leg operations on tensors whose legs are all H.
  Tensor elem(const SparseVec& a) const { return Tensor::vector(dim(), a); }
  Tensor basis_elem(std::size_t i) const { return elem(unit_vector(i)); }
  Tensor one_elem() const { return elem(one()); }
  /// Product (leg a)(leg b), placed at the lower position.
  Tensor mul(const Tensor& t, std::size_t a, std::size_t b) const { return contract(t, a, b, data_.mult); }
  Tensor comul(const Tensor& t, std::size_t leg) const {
    return apply(t, {leg}, data_.comult, {dim(), dim()}, leg);
  }
  Tensor counit_leg(const Tensor& t, std::size_t leg) const {
    return apply(t, {leg}, data_.counit, {}, leg);
  }
  Tensor S(const Tensor& t, std::size_t leg) const { return map_leg(t, leg, data_.antipode); }
  Tensor S_inv(const Tensor& t, std::size_t leg) const { return map_leg(t, leg, antipode_inverse_map()); }
  /// Legwise product in H^{(x)n}.
  Tensor product(const Tensor& a, const Tensor& b) const;
  /// Adjoint action (leg h) |> (leg x) = h_1 x S(h_2), placed at x's position
  /// among the remaining legs.
  Tensor adjoint(const Tensor& t, std::size_t h, std::size_t x) const;

  std::vector<const std::vector<std::string>*> leg_labels(std::size_t n) const {
    return std::vector<const std::vector<std::string>*>(n, &labels());
  }

 private:
  friend std::shared_ptr<const WeakHopfAlgebra> certify(std::shared_ptr<WeakHopfAlgebra> h);
  friend Certification try_certify(WeakHopfData data);

  WeakHopfData data_;
  std::vector<LinMap> left_mult_;
  Tensor delta_one_;
  LinMap eps_t_, eps_s_;
  Subspace target_, source_;
  mutable std::optional<LinMap> antipode_inverse_;
  mutable std::optional<LinMap> adjoint_;
  bool certified_ = false;
};

using AlgebraPtr = std::shared_ptr<const WeakHopfAlgebra>;

Report check_weak_hopf(const WeakHopfAlgebra& h);
/// Runs check_weak_hopf and marks the algebra certified; throws Uncertified
/// naming the first failing check.
AlgebraPtr certify(std::shared_ptr<WeakHopfAlgebra> h);
AlgebraPtr certify(WeakHopfData data);
/// Like certify, but hands back the report; `algebra` is null on failure.
struct Certification {
  AlgebraPtr algebra;
  Report report;
};
Certification try_certify(WeakHopfData data);
void require_certified(const WeakHopfAlgebra& h);

const Subspace& target_space(const WeakHopfAlgebra& h);
const Subspace& source_space(const WeakHopfAlgebra& h);
/// S^2 = id on the subalgebra generated by H_t and H_s.
bool is_regular(const WeakHopfAlgebra& h);
bool is_hopf(const WeakHopfAlgebra& h);

/// Subalgebra generated by the given subspace (closure under products).
Subspace generated_subalgebra(const WeakHopfAlgebra& h, const Subspace& s);

}  // namespace whakit
