#include "whakit/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace whakit {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw Error(ErrorKind::SyntaxError, "bundle must be a JSON object");
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

const json& field_of(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& doc, const char* key) {
  const json& v = field_of(doc, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t size_field(const json& doc, const char* key) {
  const json& v = field_of(doc, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Field parse_field(const json& v) {
  if (!v.is_object()) bad("field descriptor must be an object");
  const std::string type = string_field(v, "type");
  if (type == "rational") return Field::rational();
  if (type == "cyclotomic") {
    const std::size_t order = size_field(v, "order");
    if (order < 1) bad("cyclotomic order must be positive");
    return Field::cyclotomic(static_cast<unsigned>(order));
  }
  bad("unknown field type '" + type + "'");
}

VectorSpace parse_space(const json& doc, std::size_t dim) {
  auto it = doc.find("basis_labels");
  if (it == doc.end()) return VectorSpace::numbered(dim);
  if (!it->is_array() || it->size() != dim) bad("basis_labels must list dim strings");
  VectorSpace space{dim, {}};
  for (const auto& l : *it) {
    if (!l.is_string()) bad("basis labels must be strings");
    space.labels.push_back(l.get<std::string>());
  }
  return space;
}

/// Entries of the form [i_1, ..., i_k, "scalar"] with each i_r < bounds[r].
struct Entries {
  std::vector<std::vector<Index>> indices;
  std::vector<Scalar> values;
};

Entries parse_entries(const json& doc, const char* key, const std::vector<std::size_t>& bounds,
                      const Field& field) {
  const json& arr = field_of(doc, key);
  if (!arr.is_array()) bad(std::string("field '") + key + "' must be an array");
  Entries out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != bounds.size() + 1)
      bad(std::string("entries of '") + key + "' must have " + std::to_string(bounds.size() + 1) + " items");
    std::vector<Index> idx;
    for (std::size_t r = 0; r < bounds.size(); ++r) {
      if (!e[r].is_number_unsigned()) bad(std::string("indices of '") + key + "' must be non-negative integers");
      const Index i = e[r].get<Index>();
      if (i >= bounds[r]) bad(std::string("index ") + std::to_string(i) + " out of range in '" + key + "'");
      idx.push_back(i);
    }
    if (!e.back().is_string()) bad(std::string("scalars of '") + key + "' must be strings");
    out.indices.push_back(std::move(idx));
    out.values.push_back(parse_scalar(e.back().get<std::string>(), field));
  }
  return out;
}

SparseVec parse_vector(const json& doc, const char* key, std::size_t dim, const Field& field) {
  Entries e = parse_entries(doc, key, {dim}, field);
  SparseVec v;
  for (std::size_t t = 0; t < e.values.size(); ++t) v.push_back({e.indices[t][0], e.values[t]});
  normalize(v);
  return v;
}

/// Column index `col` of entry t, row computed by `row` from the same entry.
LinMap parse_map(const json& doc, const char* key, std::size_t rows, std::size_t cols,
                 const std::vector<std::size_t>& bounds, const Field& field,
                 const std::function<std::pair<Index, Index>(const std::vector<Index>&)>& place) {
  Entries e = parse_entries(doc, key, bounds, field);
  std::vector<std::tuple<Index, Index, Scalar>> triplets;
  for (std::size_t t = 0; t < e.values.size(); ++t) {
    auto [row, col] = place(e.indices[t]);
    triplets.emplace_back(row, col, e.values[t]);
  }
  return LinMap::from_triplets(rows, cols, triplets);
}

std::optional<LinMap> parse_optional_map(const json& doc, const char* key, std::size_t rows, std::size_t cols,
                                         const std::vector<std::size_t>& bounds, const Field& field,
                                         const std::function<std::pair<Index, Index>(const std::vector<Index>&)>& place) {
  if (!doc.contains(key)) return std::nullopt;
  return parse_map(doc, key, rows, cols, bounds, field, place);
}

// Canonical writer: a flat object whose scalar members go on one line each and
// whose entry arrays list one entry per line.
class Writer {
 public:
  void raw(const std::string& key, const std::string& value) { members_.push_back("  " + json(key).dump() + ": " + value); }
  void string(const std::string& key, const std::string& value) { raw(key, json(value).dump()); }
  void number(const std::string& key, std::size_t value) { raw(key, std::to_string(value)); }
  void field(const Field& f) {
    raw("field", f.is_rational() ? R"({"type": "rational"})"
                                  : R"({"type": "cyclotomic", "order": )" + std::to_string(f.order) + "}");
  }
  void labels(const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + json(labels[i]).dump();
    raw("basis_labels", out + "]");
  }
  void entries(const std::string& key, std::vector<std::pair<std::vector<Index>, Scalar>> rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (rows.empty()) return raw(key, "[]");
    std::string out = "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out += "    [";
      for (Index i : rows[r].first) out += std::to_string(i) + ", ";
      out += json(render_scalar(rows[r].second)).dump() + "]";
      out += r + 1 < rows.size() ? ",\n" : "\n";
    }
    raw(key, out + "  ]");
  }
  void vector(const std::string& key, const SparseVec& v) {
    std::vector<std::pair<std::vector<Index>, Scalar>> rows;
    for (const auto& e : v) rows.push_back({{e.index}, e.value});
    entries(key, std::move(rows));
  }
  /// Entry indices built from (row, col) of each non-zero.
  void map(const std::string& key, const LinMap& f,
           const std::function<std::vector<Index>(Index row, Index col)>& indices) {
    std::vector<std::pair<std::vector<Index>, Scalar>> rows;
    for (std::size_t c = 0; c < f.cols(); ++c)
      for (const auto& e : f.column(c)) rows.push_back({indices(e.index, c), e.value});
    entries(key, std::move(rows));
  }

  std::string finish() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < members_.size(); ++i) out += members_[i] + (i + 1 < members_.size() ? ",\n" : "\n");
    return out + "}\n";
  }

 private:
  std::vector<std::string> members_;
};

// Entry layouts shared by readers and writers.
auto mult_place(std::size_t d) {
  return [d](const std::vector<Index>& e) { return std::pair<Index, Index>{e[2], e[0] * d + e[1]}; };
}
auto mult_indices(std::size_t d) {
  return [d](Index row, Index col) { return std::vector<Index>{col / d, col % d, row}; };
}
auto comult_place(std::size_t d) {
  return [d](const std::vector<Index>& e) { return std::pair<Index, Index>{e[1] * d + e[2], e[0]}; };
}
auto comult_indices(std::size_t d) {
  return [d](Index row, Index col) { return std::vector<Index>{col, row / d, row % d}; };
}
std::pair<Index, Index> column_row_place(const std::vector<Index>& e) { return {e[1], e[0]}; }
std::vector<Index> column_row_indices(Index row, Index col) { return {col, row}; }
// Left coactions: [m, b, n] with row b * dim + n.
auto left_place(std::size_t dim) {
  return [dim](const std::vector<Index>& e) { return std::pair<Index, Index>{e[1] * dim + e[2], e[0]}; };
}
auto left_indices(std::size_t dim) {
  return [dim](Index row, Index col) { return std::vector<Index>{col, row / dim, row % dim}; };
}
// Right coactions: [m, n, b] with row n * dim B + b.
auto right_place(std::size_t db) {
  return [db](const std::vector<Index>& e) { return std::pair<Index, Index>{e[1] * db + e[2], e[0]}; };
}
auto right_indices(std::size_t db) {
  return [db](Index row, Index col) { return std::vector<Index>{col, row / db, row % db}; };
}

void write_module_fields(Writer& w, const ModuleBundle& m) {
  w.string("name", m.name);
  w.string("algebra", m.algebra);
  w.number("dim", m.space.dim);
  w.labels(m.space.labels);
  std::vector<std::pair<std::vector<Index>, Scalar>> action;
  for (std::size_t h = 0; h < m.action.size(); ++h)
    for (std::size_t c = 0; c < m.action[h].cols(); ++c)
      for (const auto& e : m.action[h].column(c)) action.push_back({{h, e.index, c}, e.value});
  w.entries("action", std::move(action));
  const std::size_t dim = m.space.dim;
  if (m.coaction_h) w.map("coaction_h", *m.coaction_h, left_indices(dim));
  if (m.coaction_rh) w.map("coaction_rh", *m.coaction_rh, left_indices(dim));
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresentedAlgebra parse_algebra_bundle(std::string_view text) {
  const json doc = parse_document(text);
  if (doc.contains("algebra") || doc.contains("carrier_inclusion"))
    bad("expected an algebra bundle, found a bundle over another algebra");
  WeakHopfData d;
  d.name = string_field(doc, "name");
  d.field = parse_field(field_of(doc, "field"));
  const std::size_t n = size_field(doc, "dim");
  d.space = parse_space(doc, n);
  d.mult = parse_map(doc, "mult", n, n * n, {n, n, n}, d.field, mult_place(n));
  d.unit = parse_vector(doc, "unit", n, d.field);
  d.comult = parse_map(doc, "comult", n * n, n, {n, n, n}, d.field, comult_place(n));
  d.counit = parse_map(doc, "counit", 1, n, {n}, d.field,
                       [](const std::vector<Index>& e) { return std::pair<Index, Index>{0, e[0]}; });
  d.antipode = parse_map(doc, "antipode", n, n, {n, n}, d.field, column_row_place);
  d.antipode_inverse = parse_optional_map(doc, "antipode_inverse", n, n, {n, n}, d.field, column_row_place);
  PresentedAlgebra p{std::move(d), std::nullopt, std::nullopt};
  if (doc.contains("r_matrix")) {
    Entries e = parse_entries(doc, "r_matrix", {n, n}, p.algebra.field);
    SparseVec r;
    for (std::size_t t = 0; t < e.values.size(); ++t) r.push_back({e.indices[t][0] * n + e.indices[t][1], e.values[t]});
    normalize(r);
    p.r = std::move(r);
  }
  if (doc.contains("r_inverse")) {
    if (!p.r) bad("r_inverse given without r_matrix");
    Entries e = parse_entries(doc, "r_inverse", {n, n}, p.algebra.field);
    SparseVec r;
    for (std::size_t t = 0; t < e.values.size(); ++t) r.push_back({e.indices[t][0] * n + e.indices[t][1], e.values[t]});
    normalize(r);
    p.r_bar = std::move(r);
  }
  return p;
}

std::string write_algebra_bundle(const PresentedAlgebra& p) {
  const WeakHopfData& d = p.algebra;
  const std::size_t n = d.space.dim;
  Writer w;
  w.string("name", d.name);
  w.field(d.field);
  w.number("dim", n);
  w.labels(d.space.labels);
  w.map("mult", d.mult, mult_indices(n));
  w.vector("unit", d.unit);
  w.map("comult", d.comult, comult_indices(n));
  w.map("counit", d.counit, [](Index, Index col) { return std::vector<Index>{col}; });
  w.map("antipode", d.antipode, column_row_indices);
  if (d.antipode_inverse) w.map("antipode_inverse", *d.antipode_inverse, column_row_indices);
  auto pairs = [n](const SparseVec& v) {
    std::vector<std::pair<std::vector<Index>, Scalar>> rows;
    for (const auto& e : v) rows.push_back({{e.index / n, e.index % n}, e.value});
    return rows;
  };
  if (p.r) w.entries("r_matrix", pairs(*p.r));
  if (p.r_bar) w.entries("r_inverse", pairs(*p.r_bar));
  return w.finish();
}

std::string bundle_algebra_reference(std::string_view text) { return string_field(parse_document(text), "algebra"); }

namespace {

ModuleBundle parse_module_fields(const json& doc, const BundleContext& ctx) {
  ModuleBundle m;
  m.name = doc.contains("name") ? string_field(doc, "name") : std::string();
  m.algebra = string_field(doc, "algebra");
  const std::size_t dim = size_field(doc, "dim");
  m.space = parse_space(doc, dim);
  Entries e = parse_entries(doc, "action", {ctx.h_dim, dim, dim}, ctx.field);
  std::vector<std::vector<std::tuple<Index, Index, Scalar>>> triplets(ctx.h_dim);
  for (std::size_t t = 0; t < e.values.size(); ++t)
    triplets[e.indices[t][0]].emplace_back(e.indices[t][1], e.indices[t][2], e.values[t]);
  for (std::size_t h = 0; h < ctx.h_dim; ++h) m.action.push_back(LinMap::from_triplets(dim, dim, triplets[h]));
  m.coaction_h = parse_optional_map(doc, "coaction_h", ctx.h_dim * dim, dim, {dim, ctx.h_dim, dim}, ctx.field,
                                    left_place(dim));
  if (doc.contains("coaction_rh")) {
    if (ctx.rh_dim == 0) bad("coaction_rh needs an algebra with an R-matrix");
    m.coaction_rh = parse_map(doc, "coaction_rh", ctx.rh_dim * dim, dim, {dim, ctx.rh_dim, dim}, ctx.field,
                              left_place(dim));
  }
  return m;
}

}  // namespace

ModuleBundle parse_module_bundle(std::string_view text, const BundleContext& ctx) {
  return parse_module_fields(parse_document(text), ctx);
}

std::string write_module_bundle(const ModuleBundle& m) {
  Writer w;
  write_module_fields(w, m);
  return w.finish();
}

ComoduleAlgebraBundle parse_comodule_algebra_bundle(std::string_view text, const BundleContext& ctx) {
  const json doc = parse_document(text);
  ComoduleAlgebraBundle a;
  a.module = parse_module_fields(doc, ctx);
  const std::size_t n = a.module.space.dim;
  a.mult = parse_map(doc, "mult", n, n * n, {n, n, n}, ctx.field, mult_place(n));
  a.unit = parse_vector(doc, "unit", n, ctx.field);
  if ((doc.contains("left_coaction") || doc.contains("right_coaction")) && ctx.rh_dim == 0)
    bad("coactions need an algebra with an R-matrix");
  a.left = parse_optional_map(doc, "left_coaction", ctx.rh_dim * n, n, {n, ctx.rh_dim, n}, ctx.field, left_place(n));
  a.right = parse_optional_map(doc, "right_coaction", n * ctx.rh_dim, n, {n, n, ctx.rh_dim}, ctx.field,
                               right_place(ctx.rh_dim));
  return a;
}

std::string write_comodule_algebra_bundle(const ComoduleAlgebraBundle& a) {
  Writer w;
  write_module_fields(w, a.module);
  const std::size_t n = a.module.space.dim;
  w.map("mult", a.mult, mult_indices(n));
  w.vector("unit", a.unit);
  if (a.left) w.map("left_coaction", *a.left, left_indices(n));
  if (a.right) {
    const std::size_t db = n == 0 ? 0 : a.right->rows() / n;
    w.map("right_coaction", *a.right, right_indices(db));
  }
  return w.finish();
}

BraidedBundle braided_bundle(const BraidedHopfAlgebra& b, const std::string& algebra) {
  const WeakHopfAlgebra& h = b.H();
  BraidedBundle out;
  out.name = "_R(" + h.name() + ")";
  out.algebra = algebra;
  out.field = h.field();
  out.space = b.module->space();
  out.h_dim = h.dim();
  out.carrier_inclusion = b.carrier.inclusion;
  out.mult = b.mult_full;
  out.unit = b.one();
  out.comult = b.comult_full;
  out.counit = compose(h.target().inclusion, b.counit_bar);
  out.antipode = b.antipode_bar;
  return out;
}

BraidedBundle parse_braided_bundle(std::string_view text) {
  const json doc = parse_document(text);
  BraidedBundle b;
  b.name = string_field(doc, "name");
  b.algebra = string_field(doc, "algebra");
  b.field = parse_field(field_of(doc, "field"));
  const std::size_t n = size_field(doc, "dim");
  b.h_dim = size_field(doc, "h_dim");
  b.space = parse_space(doc, n);
  b.carrier_inclusion = parse_map(doc, "carrier_inclusion", b.h_dim, n, {n, b.h_dim}, b.field, column_row_place);
  b.mult = parse_map(doc, "mult", n, n * n, {n, n, n}, b.field, mult_place(n));
  b.unit = parse_vector(doc, "unit", n, b.field);
  b.comult = parse_map(doc, "comult", n * n, n, {n, n, n}, b.field, comult_place(n));
  b.counit = parse_map(doc, "counit", b.h_dim, n, {n, b.h_dim}, b.field, column_row_place);
  b.antipode = parse_map(doc, "antipode", n, n, {n, n}, b.field, column_row_place);
  return b;
}

std::string write_braided_bundle(const BraidedBundle& b) {
  const std::size_t n = b.space.dim;
  Writer w;
  w.string("name", b.name);
  w.string("algebra", b.algebra);
  w.field(b.field);
  w.number("dim", n);
  w.number("h_dim", b.h_dim);
  w.labels(b.space.labels);
  w.map("carrier_inclusion", b.carrier_inclusion, column_row_indices);
  w.map("mult", b.mult, mult_indices(n));
  w.vector("unit", b.unit);
  w.map("comult", b.comult, comult_indices(n));
  w.map("counit", b.counit, column_row_indices);
  w.map("antipode", b.antipode, column_row_indices);
  return w.finish();
}

BundleKind detect_bundle_kind(std::string_view text) {
  const json doc = parse_document(text);
  if (doc.contains("carrier_inclusion")) return BundleKind::Braided;
  if (!doc.contains("algebra")) return BundleKind::Algebra;
  return doc.contains("mult") ? BundleKind::ComoduleAlgebra : BundleKind::Module;
}

BundleContext ResolvedAlgebra::context() const {
  return BundleContext{pair.h->field(), pair.h->dim(), braided ? braided->dim() : 0};
}

AlgebraSource load_algebra(const std::string& reference, const std::filesystem::path& base_dir) {
  AlgebraSource out;
  out.reference = reference;
  if (in_catalog(reference)) {
    out.presented = catalog(reference);
    return out;
  }
  std::filesystem::path path(reference);
  if (path.is_relative()) path = base_dir / path;
  out.presented = parse_algebra_bundle(read_file(path));
  out.path = path.lexically_normal();
  return out;
}

ResolvedAlgebra resolve_algebra(const std::string& reference, const std::filesystem::path& base_dir) {
  ResolvedAlgebra out;
  out.reference = reference;
  out.pair = certify_presented(load_algebra(reference, base_dir).presented);
  if (out.pair.r) out.braided = transmute(out.pair.r);
  return out;
}

ModulePtr to_module(const ModuleBundle& m, const AlgebraPtr& h) {
  if (m.action.size() != h->dim()) throw Error(ErrorKind::DimensionMismatch, "action does not match the algebra");
  return make_module(h, m.space, m.action, m.name);
}

ModuleBundle module_bundle(const HModule& m, const std::string& algebra, const std::optional<LinMap>& coaction_h,
                           const std::optional<LinMap>& coaction_rh) {
  return ModuleBundle{m.name(), algebra, m.space(), m.action(), coaction_h, coaction_rh};
}

AlgebraObj to_comodule_algebra(const ComoduleAlgebraBundle& a, const BraidedPtr& b) {
  if (!b) throw Error(ErrorKind::InvalidInput, "comodule algebras need an algebra with an R-matrix");
  ModulePtr module = to_module(a.module, b->base->algebra());
  return make_comodule_algebra(a.module.name, b, module, a.mult, a.unit, a.left, a.right);
}

ComoduleAlgebraBundle comodule_algebra_bundle(const ComoduleAlgebra& a, const std::string& algebra) {
  ComoduleAlgebraBundle out;
  out.module = module_bundle(*a.module, algebra);
  out.module.name = a.name;
  out.mult = a.mult;
  out.unit = a.unit;
  out.left = a.left;
  out.right = a.right;
  return out;
}

}  // namespace whakit
