#include "whakit/tensor.hpp"

#include <algorithm>

namespace whakit {

Tensor::Tensor(std::vector<std::size_t> dims, SparseVec terms)
    : dims_(std::move(dims)), terms_(std::move(terms)) {
  normalize(terms_);
  if (!terms_.empty() && terms_.back().index >= flat_size())
    throw Error(ErrorKind::DimensionMismatch, "tensor term out of range");
}

Tensor Tensor::vector(std::size_t dim, SparseVec v) { return Tensor({dim}, std::move(v)); }

Tensor Tensor::basis(std::vector<std::size_t> dims, const std::vector<Index>& multi, Scalar c) {
  Tensor t(std::move(dims));
  t.terms_ = unit_vector(t.encode(multi), std::move(c));
  return t;
}

Index Tensor::flat_size() const {
  Index n = 1;
  for (auto d : dims_) n *= d;
  return n;
}

std::vector<Index> Tensor::decode(Index flat) const {
  std::vector<Index> multi(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    multi[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return multi;
}

Index Tensor::encode(const std::vector<Index>& multi) const {
  if (multi.size() != dims_.size()) throw Error(ErrorKind::DimensionMismatch, "leg count mismatch");
  Index flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (multi[k] >= dims_[k]) throw Error(ErrorKind::DimensionMismatch, "leg index out of range");
    flat = flat * dims_[k] + multi[k];
  }
  return flat;
}

void Tensor::check_shape(const Tensor& o) const {
  if (dims_ != o.dims_) throw Error(ErrorKind::DimensionMismatch, "tensor shapes differ");
}

Tensor Tensor::operator+(const Tensor& o) const {
  check_shape(o);
  Tensor t(dims_);
  t.terms_ = add(terms_, o.terms_);
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  check_shape(o);
  Tensor t(dims_);
  t.terms_ = sub(terms_, o.terms_);
  return t;
}

Tensor Tensor::operator*(const Scalar& c) const {
  Tensor t(dims_);
  t.terms_ = scale(terms_, c);
  return t;
}

bool Tensor::operator==(const Tensor& o) const {
  return dims_ == o.dims_ && vec_equal(terms_, o.terms_);
}

Tensor outer(const Tensor& a, const Tensor& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const Index scale_b = b.flat_size();
  SparseVec terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) terms.push_back(Entry{x.index * scale_b + y.index, x.value * y.value});
  return Tensor(std::move(dims), std::move(terms));
}

Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.legs()) throw Error(ErrorKind::DimensionMismatch, "permutation size");
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) dims[k] = t.dims()[perm[k]];
  Tensor shape(dims);
  SparseVec terms;
  terms.reserve(t.terms().size());
  std::vector<Index> out(perm.size());
  for (const auto& e : t.terms()) {
    auto multi = t.decode(e.index);
    for (std::size_t k = 0; k < perm.size(); ++k) out[k] = multi[perm[k]];
    terms.push_back(Entry{shape.encode(out), e.value});
  }
  return Tensor(std::move(dims), std::move(terms));
}

Tensor apply(const Tensor& t, const std::vector<std::size_t>& legs, const LinMap& f,
             const std::vector<std::size_t>& out_dims, std::size_t insert_at) {
  std::vector<bool> used(t.legs(), false);
  Index in_size = 1;
  for (auto l : legs) {
    if (l >= t.legs() || used[l]) throw Error(ErrorKind::DimensionMismatch, "bad leg selection");
    used[l] = true;
    in_size *= t.dims()[l];
  }
  Index out_size = 1;
  for (auto d : out_dims) out_size *= d;
  if (f.cols() != in_size || f.rows() != out_size)
    throw Error(ErrorKind::DimensionMismatch,
                "map shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                    " does not fit legs " + std::to_string(out_size) + "x" + std::to_string(in_size));
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < t.legs(); ++k)
    if (!used[k]) rest.push_back(k);
  if (insert_at > rest.size()) throw Error(ErrorKind::DimensionMismatch, "insert position");

  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < insert_at; ++k) dims.push_back(t.dims()[rest[k]]);
  dims.insert(dims.end(), out_dims.begin(), out_dims.end());
  for (std::size_t k = insert_at; k < rest.size(); ++k) dims.push_back(t.dims()[rest[k]]);

  // Flat result = prefix * (out_size * suffix_size) + out * suffix_size + suffix.
  Index suffix_size = 1;
  for (std::size_t k = insert_at; k < rest.size(); ++k) suffix_size *= t.dims()[rest[k]];

  SparseVec terms;
  for (const auto& e : t.terms()) {
    auto multi = t.decode(e.index);
    Index col = 0;
    for (auto l : legs) col = col * t.dims()[l] + multi[l];
    const SparseVec& image = f.column(col);
    if (image.empty()) continue;
    Index prefix = 0, suffix = 0;
    for (std::size_t k = 0; k < insert_at; ++k) prefix = prefix * t.dims()[rest[k]] + multi[rest[k]];
    for (std::size_t k = insert_at; k < rest.size(); ++k)
      suffix = suffix * t.dims()[rest[k]] + multi[rest[k]];
    const Index base = prefix * out_size * suffix_size + suffix;
    for (const auto& x : image) terms.push_back(Entry{base + x.index * suffix_size, e.value * x.value});
  }
  return Tensor(std::move(dims), std::move(terms));
}

Tensor map_leg(const Tensor& t, std::size_t leg, const LinMap& f) {
  return apply(t, {leg}, f, {f.rows()}, leg);
}

Tensor contract(const Tensor& t, std::size_t a, std::size_t b, const LinMap& f) {
  return apply(t, {a, b}, f, {f.rows()}, std::min(a, b));
}

std::string render_tensor(const Tensor& t, const std::vector<const std::vector<std::string>*>& labels) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& e : t.terms()) {
    if (!out.empty()) out += " + ";
    if (!e.value.is_one()) out += "(" + render_scalar(e.value) + ")*";
    auto multi = t.decode(e.index);
    for (std::size_t k = 0; k < multi.size(); ++k) {
      if (k) out += "(x)";
      const auto* names = k < labels.size() ? labels[k] : nullptr;
      out += names && multi[k] < names->size() ? (*names)[multi[k]] : "e" + std::to_string(multi[k]);
    }
  }
  return out;
}

}  // namespace whakit
