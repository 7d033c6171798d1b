#include "whakit/linalg.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace whakit {

void normalize(SparseVec& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].index;
    Scalar sum = std::move(v[i].value);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == idx; ++j) sum += v[j].value;
    if (!sum.is_zero()) {
      v[out].index = idx;
      v[out].value = std::move(sum);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

SparseVec unit_vector(Index i, Scalar c) {
  if (c.is_zero()) return {};
  return {Entry{i, std::move(c)}};
}

namespace {

template <class Op>
SparseVec merge(const SparseVec& a, const SparseVec& b, Op op) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(Entry{b[j].index, op(Scalar(), b[j].value)});
      ++j;
    } else {
      Scalar s = op(a[i].value, b[j].value);
      if (!s.is_zero()) out.push_back(Entry{a[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec add(const SparseVec& a, const SparseVec& b) {
  return merge(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

SparseVec sub(const SparseVec& a, const SparseVec& b) {
  return merge(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

SparseVec scale(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  if (c.is_one()) return a;
  SparseVec out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(Entry{e.index, e.value * c});
  return out;
}

void axpy(SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return;
  a = merge(a, b, [&c](const Scalar& x, const Scalar& y) { return x + c * y; });
}

Scalar coefficient(const SparseVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != v.end() && it->index == i) return it->value;
  return Scalar();
}

bool vec_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  return true;
}

std::string render_vec(const SparseVec& v, const std::vector<std::string>* labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& e : v) {
    if (!out.empty()) out += " + ";
    std::string name = labels && e.index < labels->size() ? (*labels)[e.index]
                                                          : "e" + std::to_string(e.index);
    if (e.value.is_one()) {
      out += name;
    } else {
      out += "(" + render_scalar(e.value) + ")*" + name;
    }
  }
  return out;
}

VectorSpace VectorSpace::numbered(std::size_t dim, const std::string& prefix) {
  VectorSpace s;
  s.dim = dim;
  s.labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) s.labels.push_back(prefix + std::to_string(i));
  return s;
}

VectorSpace VectorSpace::tensor(const VectorSpace& a, const VectorSpace& b) {
  VectorSpace s;
  s.dim = a.dim * b.dim;
  s.labels.reserve(s.dim);
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) s.labels.push_back(x + "(x)" + y);
  return s;
}

// ---------------------------------------------------------------------------

LinMap::LinMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

LinMap::LinMap(std::size_t rows, std::size_t cols, std::vector<SparseVec> columns)
    : rows_(rows), cols_(cols), columns_(std::move(columns)) {
  if (columns_.size() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "column count does not match map width");
  for (auto& c : columns_) {
    normalize(c);
    check(c, rows_);
  }
}

void LinMap::check(const SparseVec& v, std::size_t bound) const {
  if (!v.empty() && v.back().index >= bound)
    throw Error(ErrorKind::DimensionMismatch,
                "index " + std::to_string(v.back().index) + " out of range " + std::to_string(bound));
}

LinMap LinMap::identity(std::size_t n) {
  LinMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = unit_vector(i);
  return m;
}

LinMap LinMap::zero(std::size_t rows, std::size_t cols) { return LinMap(rows, cols); }

LinMap LinMap::from_triplets(std::size_t rows, std::size_t cols,
                             const std::vector<std::tuple<Index, Index, Scalar>>& triplets) {
  std::vector<SparseVec> columns(cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols)
      throw Error(ErrorKind::DimensionMismatch, "triplet (" + std::to_string(r) + ", " +
                                                    std::to_string(c) + ") out of range");
    columns[c].push_back(Entry{r, v});
  }
  return LinMap(rows, cols, std::move(columns));
}

void LinMap::set_column(std::size_t j, SparseVec v) {
  normalize(v);
  check(v, rows_);
  columns_.at(j) = std::move(v);
}

Scalar LinMap::at(Index row, Index col) const { return coefficient(columns_.at(col), row); }

std::size_t LinMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseVec LinMap::apply(const SparseVec& v) const {
  check(v, cols_);
  SparseVec out;
  for (const auto& e : v)
    for (const auto& f : columns_[e.index]) out.push_back(Entry{f.index, e.value * f.value});
  normalize(out);
  return out;
}

LinMap LinMap::transpose() const {
  std::vector<SparseVec> cols(rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) cols[e.index].push_back(Entry{j, e.value});
  LinMap t(cols_, rows_);
  t.columns_ = std::move(cols);
  return t;
}

LinMap LinMap::select_rows(const std::vector<Index>& rows) const {
  std::unordered_map<Index, Index> where;
  for (std::size_t k = 0; k < rows.size(); ++k) where.emplace(rows[k], k);
  LinMap out(rows.size(), cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    SparseVec c;
    for (const auto& e : columns_[j])
      if (auto it = where.find(e.index); it != where.end()) c.push_back(Entry{it->second, e.value});
    normalize(c);
    out.columns_[j] = std::move(c);
  }
  return out;
}

LinMap LinMap::select_cols(const std::vector<Index>& cols) const {
  LinMap out(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) out.columns_[k] = columns_.at(cols[k]);
  return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.cols() != g.rows())
    throw Error(ErrorKind::DimensionMismatch, "compose: " + std::to_string(f.cols()) +
                                                  " != " + std::to_string(g.rows()));
  std::vector<SparseVec> cols(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) cols[j] = f.apply(g.column(j));
  return LinMap(f.rows(), g.cols(), std::move(cols));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  const std::size_t rows = f.rows() * g.rows();
  const std::size_t cols = f.cols() * g.cols();
  std::vector<SparseVec> out(cols);
  for (std::size_t a = 0; a < f.cols(); ++a) {
    for (std::size_t b = 0; b < g.cols(); ++b) {
      SparseVec c;
      c.reserve(f.column(a).size() * g.column(b).size());
      for (const auto& x : f.column(a))
        for (const auto& y : g.column(b))
          c.push_back(Entry{x.index * g.rows() + y.index, x.value * y.value});
      out[a * g.cols() + b] = std::move(c);
    }
  }
  return LinMap(rows, cols, std::move(out));
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw Error(ErrorKind::DimensionMismatch, "add: shapes differ");
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) cols[j] = add(f.column(j), g.column(j));
  return LinMap(f.rows(), f.cols(), std::move(cols));
}

LinMap sub(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw Error(ErrorKind::DimensionMismatch, "sub: shapes differ");
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) cols[j] = sub(f.column(j), g.column(j));
  return LinMap(f.rows(), f.cols(), std::move(cols));
}

LinMap scale(const LinMap& f, const Scalar& c) {
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) cols[j] = scale(f.column(j), c);
  return LinMap(f.rows(), f.cols(), std::move(cols));
}

bool map_eq(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (!vec_equal(f.column(j), g.column(j))) return false;
  return true;
}

LinMap vstack(const LinMap& f, const LinMap& g) {
  if (f.cols() != g.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack: widths differ");
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    cols[j] = f.column(j);
    for (const auto& e : g.column(j)) cols[j].push_back(Entry{e.index + f.rows(), e.value});
  }
  return LinMap(f.rows() + g.rows(), f.cols(), std::move(cols));
}

// ---------------------------------------------------------------------------

SparseVec Echelon::reduce(SparseVec v) const {
  // Stored vectors vanish at each other's pivots, so the coefficients of v at
  // pivot positions can be eliminated in one pass.
  SparseVec out = std::move(v);
  SparseVec delta;
  for (const auto& e : out) {
    auto it = lookup_.find(e.index);
    if (it == lookup_.end()) continue;
    for (const auto& b : basis_[it->second]) delta.push_back(Entry{b.index, -(e.value * b.value)});
  }
  if (delta.empty()) return out;
  out.insert(out.end(), delta.begin(), delta.end());
  normalize(out);
  return out;
}

bool Echelon::insert(SparseVec v) {
  SparseVec r = reduce(std::move(v));
  if (r.empty()) return false;
  const Index p = r.front().index;
  Scalar inv = r.front().value.inverse();
  r = scale(r, inv);
  for (auto& b : basis_) {
    Scalar c = coefficient(b, p);
    if (!c.is_zero()) axpy(b, -c, r);
  }
  lookup_.emplace(p, basis_.size());
  basis_.push_back(std::move(r));
  pivot_.push_back(p);
  return true;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<std::size_t> order(basis_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
  std::vector<SparseVec> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(basis_[i]);
  return out;
}

std::vector<Index> Echelon::pivots() const {
  std::vector<Index> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

// ---------------------------------------------------------------------------

bool Subspace::contains(const SparseVec& v) const {
  return vec_equal(inclusion.apply(projection.apply(v)), v);
}

Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) e.insert(v);
  std::vector<SparseVec> basis = e.basis();
  std::vector<Index> piv = e.pivots();
  Subspace s;
  s.ambient = ambient;
  const std::size_t k = basis.size();
  s.inclusion = LinMap(ambient, k, std::move(basis));
  std::vector<SparseVec> proj(ambient);
  for (std::size_t k = 0; k < piv.size(); ++k) proj[piv[k]] = unit_vector(k);
  s.projection = LinMap(piv.size(), ambient, std::move(proj));
  return s;
}

Subspace image(const LinMap& f) { return span(f.rows(), f.columns()); }

std::size_t rank(const LinMap& f) {
  Echelon e(f.rows());
  for (const auto& c : f.columns()) e.insert(c);
  return e.rank();
}

Subspace kernel(const LinMap& f) {
  const LinMap rows = f.transpose();
  Echelon e(f.cols());
  for (const auto& r : rows.columns()) e.insert(r);
  std::vector<Index> piv = e.pivots();
  std::vector<bool> is_pivot(f.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Index> free;
  std::vector<Index> slot(f.cols(), 0);
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (!is_pivot[j]) {
      slot[j] = free.size();
      free.push_back(j);
    }
  std::vector<SparseVec> cols(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) cols[k].push_back(Entry{free[k], Scalar(1)});
  for (const auto& b : e.basis()) {
    const Index p = b.front().index;
    for (std::size_t t = 1; t < b.size(); ++t) cols[slot[b[t].index]].push_back(Entry{p, -b[t].value});
  }
  Subspace s;
  s.ambient = f.cols();
  s.inclusion = LinMap(f.cols(), free.size(), std::move(cols));
  std::vector<SparseVec> proj(f.cols());
  for (std::size_t k = 0; k < free.size(); ++k) proj[free[k]] = unit_vector(k);
  s.projection = LinMap(free.size(), f.cols(), std::move(proj));
  return s;
}

std::optional<SparseVec> solve(const LinMap& f, const SparseVec& y) {
  const LinMap rows = f.transpose();
  const Index aug = f.cols();
  Echelon e(f.cols() + 1);
  for (std::size_t r = 0; r < f.rows(); ++r) {
    SparseVec row = rows.column(r);
    Scalar rhs = coefficient(y, r);
    if (!rhs.is_zero()) row.push_back(Entry{aug, rhs});
    e.insert(std::move(row));
  }
  for (const auto& e2 : y)
    if (e2.index >= f.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs too long");
  SparseVec x;
  for (const auto& b : e.basis()) {
    const Index p = b.front().index;
    if (p == aug) return std::nullopt;
    Scalar v = coefficient(b, aug);
    if (!v.is_zero()) x.push_back(Entry{p, v});
  }
  normalize(x);
  return x;
}

bool is_idempotent(const LinMap& p) {
  return p.rows() == p.cols() && map_eq(compose(p, p), p);
}

Subspace split_idempotent(const LinMap& p) {
  if (!is_idempotent(p)) throw Error(ErrorKind::NotIdempotent, "map is not idempotent");
  Subspace s = span(p.rows(), p.columns());
  std::vector<Index> piv;
  for (std::size_t k = 0; k < s.dim(); ++k) piv.push_back(s.inclusion.column(k).front().index);
  s.projection = p.select_rows(piv);
  return s;
}

bool same_span(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
  Echelon e(b.ambient);
  for (const auto& c : b.inclusion.columns()) e.insert(c);
  for (const auto& c : a.inclusion.columns())
    if (!e.contains(c)) return false;
  return true;
}

std::optional<LinMap> inverse(const LinMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  const std::size_t n = f.rows();
  const LinMap rows = f.transpose();
  Echelon e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVec row = rows.column(r);
    row.push_back(Entry{n + r, Scalar(1)});
    e.insert(std::move(row));
  }
  std::vector<std::tuple<Index, Index, Scalar>> trip;
  for (const auto& b : e.basis()) {
    const Index p = b.front().index;
    if (p >= n) return std::nullopt;
    for (const auto& x : b)
      if (x.index >= n) trip.emplace_back(p, x.index - n, x.value);
  }
  if (e.rank() != n) return std::nullopt;
  return LinMap::from_triplets(n, n, trip);
}

LinMap restrict_map(const LinMap& f, const Subspace& source, const Subspace& target) {
  return compose(target.projection, compose(f, source.inclusion));
}

}  // namespace whakit
