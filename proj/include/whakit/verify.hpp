#pragma once

// Helpers for turning identities between linear maps into report entries.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "whakit/linalg.hpp"
#include "whakit/report.hpp"
#include "whakit/rng.hpp"
#include "whakit/tensor.hpp"

namespace whakit {

/// Column j is f(j).
LinMap tabulate(std::size_t rows, std::size_t cols, const std::function<SparseVec(std::size_t)>& f);

using ColumnNamer = std::function<std::vector<std::string>(std::size_t)>;
using VecRenderer = std::function<std::string(const SparseVec&)>;

/// Witness for the first column on which lhs and rhs differ.
std::optional<Witness> first_difference(const LinMap& lhs, const LinMap& rhs, const ColumnNamer& name,
                                        const VecRenderer& render);

ColumnNamer label_namer(const std::vector<std::string>& labels);
/// Names column j of a map out of V_1 (x) ... (x) V_n by its leg labels.
ColumnNamer tensor_namer(const std::vector<const std::vector<std::string>*>& legs);
VecRenderer tensor_renderer(const std::vector<const std::vector<std::string>*>& legs);

/// Witness if f differs from the identity; `where` is prepended to the indices.
std::optional<Witness> identity_witness(const LinMap& f, const std::string& where);
/// Witness if lhs and rhs differ on some basis vector of s.
std::optional<Witness> on_subspace(const LinMap& lhs, const LinMap& rhs, const Subspace& s,
                                   const std::string& where);
/// Combination of the basis of s with coefficients drawn from [-3, 3].
SparseVec random_combination(const Subspace& s, Lcg& rng);

}  // namespace whakit
