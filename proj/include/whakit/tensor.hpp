#pragma once

// Sparse elements of V_1 (x) ... (x) V_n.  Sweedler-notation formulas are
// evaluated by applying linear maps to chosen legs of such tensors.

#include <cstddef>
#include <string>
#include <vector>

#include "whakit/linalg.hpp"

namespace whakit {

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}
  Tensor(std::vector<std::size_t> dims, SparseVec terms);

  /// One-leg tensor from a vector of the given dimension.
  static Tensor vector(std::size_t dim, SparseVec v);
  static Tensor basis(std::vector<std::size_t> dims, const std::vector<Index>& multi,
                      Scalar c = Scalar(1));

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t legs() const { return dims_.size(); }
  Index flat_size() const;
  const SparseVec& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::vector<Index> decode(Index flat) const;
  Index encode(const std::vector<Index>& multi) const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Scalar& c) const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

 private:
  void check_shape(const Tensor& o) const;

  std::vector<std::size_t> dims_;
  SparseVec terms_;
};

Tensor outer(const Tensor& a, const Tensor& b);
/// Result leg k is input leg perm[k].
Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm);

/// Removes `legs` (flattened in the listed order, first most significant),
/// feeds them to f and inserts f's output legs (shape out_dims) at position
/// `insert_at` of the remaining leg list.
Tensor apply(const Tensor& t, const std::vector<std::size_t>& legs, const LinMap& f,
             const std::vector<std::size_t>& out_dims, std::size_t insert_at);

/// f applied to a single leg, in place.
Tensor map_leg(const Tensor& t, std::size_t leg, const LinMap& f);

/// Bilinear f : V_a (x) V_b -> W applied to legs a and b; the output replaces
/// the lower of the two positions.
Tensor contract(const Tensor& t, std::size_t a, std::size_t b, const LinMap& f);

std::string render_tensor(const Tensor& t,
                          const std::vector<const std::vector<std::string>*>& labels = {});

}  // namespace whakit
