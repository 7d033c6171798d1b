#pragma once

// Exact sparse linear algebra over Scalar.
//
// Basis of M (x) N is ordered lexicographically with the M index major:
// (m, n) has flat index m * dim(N) + n.  Every module uses this convention.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "whakit/scalar.hpp"

namespace whakit {

using Index = std::uint64_t;

struct Entry {
  Index index;
  Scalar value;
};

/// Sorted by index, no duplicate indices, no stored zeros.
using SparseVec = std::vector<Entry>;

/// Sort, merge duplicates and drop zeros.
void normalize(SparseVec& v);
SparseVec unit_vector(Index i, Scalar c = Scalar(1));
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Scalar& c);
/// a += c * b
void axpy(SparseVec& a, const Scalar& c, const SparseVec& b);
Scalar coefficient(const SparseVec& v, Index i);
bool vec_equal(const SparseVec& a, const SparseVec& b);
std::string render_vec(const SparseVec& v, const std::vector<std::string>* labels = nullptr);

struct VectorSpace {
  std::size_t dim = 0;
  std::vector<std::string> labels;

  static VectorSpace numbered(std::size_t dim, const std::string& prefix = "e");
  /// Labels of A (x) B in the lexicographic convention.
  static VectorSpace tensor(const VectorSpace& a, const VectorSpace& b);
};

/// Column-sparse matrix: column j holds the image of basis vector j.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols);
  LinMap(std::size_t rows, std::size_t cols, std::vector<SparseVec> columns);

  static LinMap identity(std::size_t n);
  static LinMap zero(std::size_t rows, std::size_t cols);
  /// Entries (row, col, value); duplicates are summed.
  static LinMap from_triplets(std::size_t rows, std::size_t cols,
                              const std::vector<std::tuple<Index, Index, Scalar>>& triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  void set_column(std::size_t j, SparseVec v);
  Scalar at(Index row, Index col) const;
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& v) const;
  LinMap transpose() const;
  /// Rows listed in `rows`, renumbered 0..k-1.
  LinMap select_rows(const std::vector<Index>& rows) const;
  LinMap select_cols(const std::vector<Index>& cols) const;

 private:
  void check(const SparseVec& v, std::size_t bound) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// f o g
LinMap compose(const LinMap& f, const LinMap& g);
/// Kronecker product in the lexicographic convention.
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap add(const LinMap& f, const LinMap& g);
LinMap sub(const LinMap& f, const LinMap& g);
LinMap scale(const LinMap& f, const Scalar& c);
bool map_eq(const LinMap& f, const LinMap& g);
/// Stacks [f; g] vertically (same column count).
LinMap vstack(const LinMap& f, const LinMap& g);

/// Incrementally maintained reduced echelon basis.  Each stored vector has
/// leading (smallest) index as pivot with coefficient 1 and every other
/// stored vector vanishes at that pivot.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

  /// Reduces v against the basis; returns true if it was independent and added.
  bool insert(SparseVec v);
  /// Residue of v after elimination against the basis.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  /// Basis ordered by pivot.
  std::vector<SparseVec> basis() const;
  std::vector<Index> pivots() const;

 private:
  std::size_t ambient_;
  std::vector<SparseVec> basis_;
  std::vector<Index> pivot_;
  std::unordered_map<Index, std::size_t> lookup_;
};

struct Subspace {
  std::size_t ambient = 0;
  LinMap inclusion;   // ambient x dim
  LinMap projection;  // dim x ambient, projection o inclusion = id

  std::size_t dim() const { return inclusion.cols(); }
  SparseVec include(const SparseVec& v) const { return inclusion.apply(v); }
  SparseVec project(const SparseVec& v) const { return projection.apply(v); }
  /// inclusion o projection
  LinMap projector() const { return compose(inclusion, projection); }
  bool contains(const SparseVec& v) const;
};

/// Span of the given vectors with canonical reduced column echelon basis and
/// projection selecting pivot coordinates.
Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors);
Subspace image(const LinMap& f);
Subspace kernel(const LinMap& f);
std::size_t rank(const LinMap& f);
std::optional<SparseVec> solve(const LinMap& f, const SparseVec& y);
bool is_idempotent(const LinMap& p);
/// Subspace for the image of an idempotent P with projection = rows of P, so
/// that inclusion o projection = P.  Throws NotIdempotent.
Subspace split_idempotent(const LinMap& p);
bool same_span(const Subspace& a, const Subspace& b);
/// Inverse of a square map, if it exists.
std::optional<LinMap> inverse(const LinMap& f);
/// Restriction of f : A -> B to subspaces S of A and T of B (f(S) must lie in T).
LinMap restrict_map(const LinMap& f, const Subspace& source, const Subspace& target);

}  // namespace whakit
