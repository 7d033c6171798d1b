#include "whakit/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "whakit/bundle.hpp"
#include "whakit/face_algebra.hpp"

namespace whakit {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

const fs::path kStateFile = fs::path(".whakit") / "last_report.json";

/// Malformed input: maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto as_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

struct Options {
  std::uint64_t seed = 0;
  std::string samples;
  std::string format = "text";
  std::string output;
  bool timings = false;
};

class Session {
 public:
  Session(std::vector<std::string> command, const Options& options) : command_(std::move(command)), options_(options) {}

  const Options& options() const { return options_; }
  std::vector<Report>& reports() { return reports_; }
  void add(Report r) { reports_.push_back(std::move(r)); }

  std::string read_input(const fs::path& path) {
    std::string text = as_input([&] { return read_file(path); });
    record(path.lexically_normal().generic_string(), text);
    return text;
  }
  void record(const std::string& name, const std::string& bytes) {
    for (const auto& [n, d] : inputs_)
      if (n == name) return;
    inputs_.emplace_back(name, sha256_hex(bytes));
  }

  bool passed() const {
    for (const auto& r : reports_)
      if (!r.passed()) return false;
    return true;
  }

  std::string run_report() const {
    ordered_json doc;
    doc["tool"] = "whakit";
    doc["version"] = kVersion;
    doc["command"] = command_;
    doc["seed"] = options_.seed;
    doc["inputs"] = ordered_json::array();
    for (const auto& [n, d] : inputs_) doc["inputs"].push_back({{"name", n}, {"sha256", d}});
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports_) doc["reports"].push_back(ordered_json::parse(r.to_json(-1, options_.timings)));
    doc["passed"] = passed();
    return doc.dump(2) + "\n";
  }

 private:
  std::vector<std::string> command_;
  Options options_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<Report> reports_;
};

struct LoadedAlgebra {
  AlgebraSource source;
  CertifiedPair pair;
  BraidedPtr braided;

  BundleContext context() const { return BundleContext{pair.h->field(), pair.h->dim(), braided ? braided->dim() : 0}; }
  /// How a bundle written to `out` refers to this algebra.
  std::string reference_from(const fs::path& out) const {
    if (!source.path) return source.reference;
    const fs::path dir = out.empty() ? fs::current_path() : fs::absolute(out).parent_path();
    return fs::relative(fs::absolute(*source.path), dir).generic_string();
  }
  bool same_as(const LoadedAlgebra& o) const {
    if (source.path.has_value() != o.source.path.has_value()) return false;
    if (!source.path) return source.reference == o.source.reference;
    std::error_code ec;
    return fs::equivalent(*source.path, *o.source.path, ec);
  }
};

/// Loads and certifies; returns nothing when certification fails (the failing
/// reports are in the session).
std::optional<LoadedAlgebra> load_certified(Session& s, const std::string& reference, const fs::path& base_dir,
                                            bool need_r) {
  LoadedAlgebra out;
  if (in_catalog(reference)) {
    out.source = as_input([&] { return load_algebra(reference, base_dir); });
    s.record("catalog:" + reference, write_algebra_bundle(out.source.presented));
  } else {
    fs::path path(reference);
    if (path.is_relative()) path = base_dir / path;
    const std::string text = s.read_input(path);
    out.source.reference = reference;
    out.source.path = path.lexically_normal();
    out.source.presented = as_input([&] { return parse_algebra_bundle(text); });
  }
  if (need_r && !out.source.presented.r) throw InputError(reference + " carries no R-matrix");
  out.pair = as_input([&] { return certify_presented(out.source.presented, s.reports()); });
  if (!out.pair.h || (out.source.presented.r && !out.pair.r)) return std::nullopt;
  if (out.pair.r) out.braided = transmute(out.pair.r);
  return out;
}

struct LoadedObject {
  LoadedAlgebra algebra;
  AlgebraObj object;
};

std::optional<LoadedObject> load_comodule_algebra(Session& s, const fs::path& path,
                                                  const LoadedAlgebra* expected = nullptr) {
  const std::string text = s.read_input(path);
  const std::string ref = as_input([&] { return bundle_algebra_reference(text); });
  auto alg = load_certified(s, ref, path.parent_path(), true);
  if (!alg) return std::nullopt;
  if (expected) {
    if (!alg->same_as(*expected)) throw InputError(path.string() + " is over a different algebra");
    alg = *expected;
  }
  const ComoduleAlgebraBundle bundle = as_input([&] { return parse_comodule_algebra_bundle(text, alg->context()); });
  AlgebraObj obj = as_input([&] { return to_comodule_algebra(bundle, alg->braided); });
  return LoadedObject{std::move(*alg), std::move(obj)};
}

std::vector<std::string> split_names(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

RHComodule named_comodule(Session& s, const std::string& name, const LoadedAlgebra& alg) {
  const BraidedPtr& b = alg.braided;
  if (name == "regular") return trivial_comodule(b, regular_module(alg.pair.h));
  if (name == "unit") return trivial_comodule(b, b->unit_module);
  if (name == "rh") return regular_comodule(b);
  const std::string text = s.read_input(name);
  const ModuleBundle m = as_input([&] { return parse_module_bundle(text, alg.context()); });
  ModulePtr module = as_input([&] { return to_module(m, alg.pair.h); });
  if (m.coaction_rh) return RHComodule{b, module, *m.coaction_rh};
  if (m.coaction_h) return functor_G(b, YDModule{module, *m.coaction_h});
  return trivial_comodule(b, module);
}

std::vector<RHComodule> comodule_samples(Session& s, const LoadedAlgebra& alg) {
  if (s.options().samples.empty()) return standard_comodule_samples(alg.braided);
  std::vector<RHComodule> out;
  for (const auto& name : split_names(s.options().samples)) out.push_back(named_comodule(s, name, alg));
  if (out.empty()) throw InputError("--samples names nothing");
  return out;
}

void emit_bundle(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.output);
  f << text;
}

// Commands.  Each fills the session; the caller handles output and exit codes.

void cmd_check(Session& s, const std::string& algebra) {
  auto alg = load_certified(s, algebra, fs::current_path(), false);
  if (alg && alg->pair.r) s.add(check_derived_r_identities(*alg->pair.r));
}

void cmd_transmute(Session& s, const std::string& algebra, std::ostream& out) {
  auto alg = load_certified(s, algebra, fs::current_path(), true);
  if (!alg) return;
  s.add(check_braided_hopf(*alg->braided));
  emit_bundle(s.options(), write_braided_bundle(braided_bundle(*alg->braided, alg->reference_from(s.options().output))),
              out);
}

void cmd_yd_roundtrip(Session& s, const std::string& algebra) {
  auto alg = load_certified(s, algebra, fs::current_path(), true);
  if (!alg) return;
  s.add(check_equivalence_roundtrip(alg->braided, comodule_samples(s, *alg)));
}

void cmd_braiding_check(Session& s, const std::string& algebra) {
  auto alg = load_certified(s, algebra, fs::current_path(), true);
  if (!alg) return;
  BraidingOptions options;
  options.seed = s.options().seed;
  s.add(check_comodule_braiding(alg->braided, comodule_samples(s, *alg), options));
}

void cmd_galois_check(Session& s, const std::string& path) {
  auto obj = load_comodule_algebra(s, path);
  if (!obj) return;
  s.add(certify_qc_galois(*obj->object));
  const AlgebraPtr& h = obj->algebra.pair.h;
  s.add(check_trivializable(*obj->object, {regular_module(h), obj->algebra.braided->unit_module}, s.options().seed));
}

void cmd_cotensor(Session& s, const std::string& a_path, const std::string& b_path, std::ostream& out) {
  auto a = load_comodule_algebra(s, a_path);
  if (!a) return;
  auto b = load_comodule_algebra(s, b_path, &a->algebra);
  if (!b) return;
  s.add(check_group_law(*a->object, *b->object));
  AlgebraObj c = cotensor_algebra(*a->object, *b->object);
  emit_bundle(s.options(),
              write_comodule_algebra_bundle(comodule_algebra_bundle(*c, a->algebra.reference_from(s.options().output))),
              out);
}

void cmd_autoequiv(Session& s, const std::string& path, const std::string& probe) {
  auto obj = load_comodule_algebra(s, path);
  if (!obj) return;
  std::vector<std::pair<RHComodule, RHComodule>> pairs;
  if (probe.empty()) {
    const RHComodule rh = regular_comodule(obj->algebra.braided);
    pairs.push_back({rh, rh});
    pairs.push_back({named_comodule(s, "unit", obj->algebra), rh});
  } else {
    for (const auto& name : split_names(probe)) {
      const RHComodule m = named_comodule(s, name, obj->algebra);
      pairs.push_back({m, m});
    }
    if (pairs.empty()) throw InputError("--probe names nothing");
  }
  s.add(check_autoequivalence_diagram(*obj->object, pairs));
}

unsigned face_order(unsigned n) {
  if (n < 2) throw InputError("--n must be at least 2");
  return n;
}

void cmd_face(Session& s, unsigned n, std::ostream& out) {
  const PresentedAlgebra p = face_algebra(face_order(n));
  Report rep("face algebra N=" + std::to_string(n));
  rep.set_info("dim", std::to_string(p.algebra.space.dim));
  s.add(std::move(rep));
  emit_bundle(s.options(), write_algebra_bundle(p), out);
}

void cmd_face_check(Session& s, unsigned n) {
  const std::string name = "face:" + std::to_string(face_order(n));
  auto alg = load_certified(s, name, fs::current_path(), true);
  if (!alg) return;
  s.add(check_derived_r_identities(*alg->pair.r));
  s.add(check_braided_hopf(*alg->braided));
  s.add(check_face_structure(n));
}

void cmd_face_galois(Session& s, unsigned n, std::size_t component, const std::string& param, std::ostream& out) {
  const std::string name = "face:" + std::to_string(face_order(n));
  if (component >= n) throw InputError("--component must be below N");
  const Scalar a = as_input([&] { return parse_scalar(param, Field::cyclotomic(n)); });
  auto alg = load_certified(s, name, fs::current_path(), true);
  if (!alg) return;
  AlgebraObj obj;
  try {
    obj = cocycle_galois_object(alg->braided, n, component, a);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroParameter) throw InputError(e.what());
    throw;
  }
  s.add(certify_qc_galois(*obj));
  s.add(check_omega_roundtrip(alg->braided, n, component, a));
  emit_bundle(s.options(), write_comodule_algebra_bundle(comodule_algebra_bundle(*obj, name)), out);
}

void save_state(const std::string& json, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(kStateFile.parent_path(), ec);
  std::ofstream f(kStateFile, std::ios::binary);
  if (!f) {
    err << "whakit: warning: cannot write " << kStateFile.string() << "\n";
    return;
  }
  f << json;
}

void print_reports(Session& s, std::ostream& out) {
  if (s.options().format == "json") {
    out << s.run_report();
    return;
  }
  for (const auto& r : s.reports()) out << r.to_text(s.options().timings);
  for (const auto& r : s.reports())
    if (const CheckResult* f = r.first_failure()) {
      out << "first failure: " << r.subject() << ": " << f->name << "\n";
      break;
    }
  out << (s.passed() ? "PASSED" : "FAILED") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification for quasitriangular weak Hopf algebras", "whakit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options options;
  app.add_option("--seed", options.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", options.samples, "Comma-separated comodule samples: regular, unit, rh or module bundle paths");
  app.add_option("--format", options.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("-o,--output", options.output, "Output path for emitted bundles");
  app.add_flag("--timings", options.timings, "Include per-check timings in reports");

  std::string algebra, path_a, path_b, probe, param;
  unsigned n = 0;
  std::size_t component = 0;

  auto* check = app.add_subcommand("check", "Weak Hopf axioms, R-matrix axioms and derived identities");
  check->add_option("algebra", algebra, "Algebra bundle or catalog name")->required();
  auto* transmute_cmd = app.add_subcommand("transmute", "Emit the transmuted braided Hopf algebra");
  transmute_cmd->add_option("algebra", algebra)->required();
  auto* yd = app.add_subcommand("yd-roundtrip", "Comodules over _RH versus Yetter-Drinfeld modules");
  yd->add_option("algebra", algebra)->required();
  auto* braiding = app.add_subcommand("braiding-check", "Braiding of _RH-comodules: inverse, naturality, hexagons");
  braiding->add_option("algebra", algebra)->required();
  auto* galois = app.add_subcommand("galois", "Galois object checks");
  galois->require_subcommand(1);
  auto* galois_check = galois->add_subcommand("check", "Certify a quantum commutative bi-Galois object");
  galois_check->add_option("object", path_a, "Comodule-algebra bundle")->required();
  auto* cot = app.add_subcommand("cotensor", "Cotensor product of two Galois objects");
  cot->add_option("a", path_a)->required();
  cot->add_option("b", path_b)->required();
  auto* autoequiv = app.add_subcommand("autoequiv-test", "Braided autoequivalence diagram for A box -");
  autoequiv->add_option("object", path_a)->required();
  autoequiv->add_option("--probe", probe, "Comma-separated comodules M tested as (M, M)");
  auto* face = app.add_subcommand("face", "Emit the face algebra bundle with its R-matrix");
  face->add_option("--n", n)->required();
  auto* face_check = app.add_subcommand("face-check", "Face algebra structure: transmutation tables and blocks");
  face_check->add_option("--n", n)->required();
  auto* face_galois = app.add_subcommand("face-galois", "Emit a cocycle Galois object over the face algebra");
  face_galois->add_option("--n", n)->required();
  face_galois->add_option("--component", component)->capture_default_str();
  face_galois->add_option("--param", param)->required();
  auto* report = app.add_subcommand("report", "Print the last RunReport");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  galois_check->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (report->parsed()) {
    std::ifstream f(kStateFile, std::ios::binary);
    if (!f) {
      err << "whakit: no report recorded yet\n";
      return 2;
    }
    out << f.rdbuf();
    return 0;
  }

  Session session(args, options);
  try {
    if (check->parsed()) cmd_check(session, algebra);
    else if (transmute_cmd->parsed()) cmd_transmute(session, algebra, out);
    else if (yd->parsed()) cmd_yd_roundtrip(session, algebra);
    else if (braiding->parsed()) cmd_braiding_check(session, algebra);
    else if (galois_check->parsed()) cmd_galois_check(session, path_a);
    else if (cot->parsed()) cmd_cotensor(session, path_a, path_b, out);
    else if (autoequiv->parsed()) cmd_autoequiv(session, path_a, probe);
    else if (face->parsed()) cmd_face(session, n, out);
    else if (face_check->parsed()) cmd_face_check(session, n);
    else if (face_galois->parsed()) cmd_face_galois(session, n, component, param, out);
  } catch (const InputError& e) {
    err << "whakit: input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Report rep("error");
    rep.fail(std::string("error.") + to_string(e.kind()), Witness{{}, "", e.what()});
    session.add(std::move(rep));
  }

  save_state(session.run_report(), err);
  // A bundle written to stdout owns it; reports then go to stderr.
  const bool bundle_on_stdout = options.output.empty() && (transmute_cmd->parsed() || cot->parsed() ||
                                                           face->parsed() || face_galois->parsed());
  print_reports(session, bundle_on_stdout ? err : out);
  return session.passed() ? 0 : 1;
}

}  // namespace whakit
