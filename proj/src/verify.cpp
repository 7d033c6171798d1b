#include "whakit/verify.hpp"

namespace whakit {

LinMap tabulate(std::size_t rows, std::size_t cols, const std::function<SparseVec(std::size_t)>& f) {
  std::vector<SparseVec> columns(cols);
  for (std::size_t j = 0; j < cols; ++j) columns[j] = f(j);
  return LinMap(rows, cols, std::move(columns));
}

std::optional<Witness> first_difference(const LinMap& lhs, const LinMap& rhs, const ColumnNamer& name,
                                        const VecRenderer& render) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error(ErrorKind::DimensionMismatch, "compared maps have different shapes");
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (!vec_equal(lhs.column(j), rhs.column(j)))
      return Witness{name(j), render(lhs.column(j)), render(rhs.column(j))};
  return std::nullopt;
}

ColumnNamer label_namer(const std::vector<std::string>& labels) {
  return [labels](std::size_t j) {
    return std::vector<std::string>{j < labels.size() ? labels[j] : "e" + std::to_string(j)};
  };
}

ColumnNamer tensor_namer(const std::vector<const std::vector<std::string>*>& legs) {
  return [legs](std::size_t j) {
    std::vector<std::string> out(legs.size());
    for (std::size_t k = legs.size(); k-- > 0;) {
      const auto n = legs[k]->size();
      const auto i = j % n;
      j /= n;
      out[k] = (*legs[k])[i];
    }
    return out;
  };
}

VecRenderer tensor_renderer(const std::vector<const std::vector<std::string>*>& legs) {
  std::vector<std::size_t> dims;
  for (const auto* l : legs) dims.push_back(l->size());
  return [legs, dims](const SparseVec& v) { return render_tensor(Tensor(dims, v), legs); };
}

std::optional<Witness> identity_witness(const LinMap& f, const std::string& where) {
  auto render = [](const SparseVec& v) { return render_vec(v); };
  auto w = first_difference(f, LinMap::identity(f.cols()), label_namer({}), render);
  if (w) w->indices.insert(w->indices.begin(), where);
  return w;
}

std::optional<Witness> on_subspace(const LinMap& lhs, const LinMap& rhs, const Subspace& s,
                                   const std::string& where) {
  auto w = first_difference(compose(lhs, s.inclusion), compose(rhs, s.inclusion), label_namer({}),
                            [](const SparseVec& v) { return render_vec(v); });
  if (w) w->indices.insert(w->indices.begin(), where);
  return w;
}

SparseVec random_combination(const Subspace& s, Lcg& rng) {
  SparseVec v;
  for (std::size_t k = 0; k < s.dim(); ++k) axpy(v, Scalar(static_cast<long>(rng.between(-3, 3))), s.inclusion.column(k));
  return v;
}

}  // namespace whakit
