// Acceptance suite: one PASS/FAIL line per criterion, details of failures on stderr.

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "whakit/bundle.hpp"
#include "whakit/cli.hpp"
#include "whakit/face_algebra.hpp"
#include "whakit/galois.hpp"
#include "whakit/transmutation.hpp"
#include "whakit/yetter_drinfeld.hpp"

using namespace whakit;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = WHAKIT_FIXTURE_DIR;

/// Collects failures for one criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void expect(const Report& rep, const std::string& what) {
    if (rep.passed()) return;
    const CheckResult* f = rep.first_failure();
    std::string detail = what + ": " + f->name;
    if (f->witness) {
      std::string at;
      for (const auto& i : f->witness->indices) at += (at.empty() ? "" : ", ") + i;
      detail += " at " + at + ": expected " + f->witness->expected + ", got " + f->witness->actual;
    }
    failures_.push_back(detail);
  }
  void vacuous(const std::string& what) { notes_.push_back("vacuous: " + what); }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_, notes_;
};

struct Criterion {
  int number;
  std::string name;
  std::function<void(Outcome&)> body;
};

BraidedPtr braided(const std::string& name) {
  static std::map<std::string, BraidedPtr> cache;
  auto& b = cache[name];
  if (!b) b = transmute(certify_presented(catalog(name)).r);
  return b;
}

const Report& face_structure(unsigned n) {
  static std::map<unsigned, Report> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, check_face_structure(n)).first;
  return it->second;
}

std::string face(unsigned n) { return "face:" + std::to_string(n); }

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

struct ScratchDir {
  fs::path previous = fs::current_path();
  fs::path dir = fs::temp_directory_path() / ("whakit_acceptance_" + std::to_string(::getpid()));
  ScratchDir() {
    fs::create_directories(dir);
    fs::current_path(dir);
  }
  ~ScratchDir() {
    fs::current_path(previous);
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

std::string rewrite(const fs::path& path) {
  const std::string text = read_file(path);
  switch (detect_bundle_kind(text)) {
    case BundleKind::Algebra:
      return write_algebra_bundle(parse_algebra_bundle(text));
    case BundleKind::Braided:
      return write_braided_bundle(parse_braided_bundle(text));
    case BundleKind::Module: {
      const ResolvedAlgebra r = resolve_algebra(bundle_algebra_reference(text), path.parent_path());
      return write_module_bundle(parse_module_bundle(text, r.context()));
    }
    case BundleKind::ComoduleAlgebra: {
      const ResolvedAlgebra r = resolve_algebra(bundle_algebra_reference(text), path.parent_path());
      return write_comodule_algebra_bundle(parse_comodule_algebra_bundle(text, r.context()));
    }
  }
  return {};
}

/// Every certified quantum commutative bi-Galois object built by the suite.
std::vector<std::pair<std::string, AlgebraObj>> galois_instances() {
  std::vector<std::pair<std::string, AlgebraObj>> out;
  for (const std::string name : {"face:2", "face:3", "sweedler"})
    out.emplace_back("_RH over " + name, rh_comodule_algebra(braided(name)));
  const std::vector<std::pair<unsigned, long>> cocycles{{2, 1}, {2, 2}, {2, -1}, {3, 1}, {3, 2}};
  for (const auto& [n, a] : cocycles)
    out.emplace_back("A_" + std::to_string(a) + " over " + face(n),
                     cocycle_galois_object(braided(face(n)), n, 0, Scalar(a)));
  const AlgebraObj a2 = cocycle_galois_object(braided("face:2"), 2, 0, Scalar(2));
  const AlgebraObj am1 = cocycle_galois_object(braided("face:2"), 2, 0, Scalar(-1));
  out.emplace_back("A_2 box A_-1 over face:2", cotensor_algebra(*a2, *am1));
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "face algebra certification for N = 2..5",
       [](Outcome& o) {
         ScratchDir scratch;
         for (unsigned n = 2; n <= 5; ++n) {
           const std::string file = "face_" + std::to_string(n) + ".json";
           o.expect(cli({"face", "--n", std::to_string(n), "-o", file}) == 0, "emit " + file);
           std::string out;
           o.expect(cli({"check", file}, &out) == 0, "check " + file);
           o.expect(out.find("r.yang_baxter") != std::string::npos, "Yang-Baxter reported for " + file);
           o.expect(out.find("derived") != std::string::npos, "derived identities reported for " + file);
         }
       }},
      {2, "transmutation of the face algebra matches the closed form",
       [](Outcome& o) {
         for (unsigned n = 2; n <= 5; ++n) {
           const Report& rep = face_structure(n);
           for (const char* name : {"transmutation.carrier", "transmutation.product", "transmutation.comultiplication",
                                    "transmutation.counit", "transmutation.unit", "transmutation.antipode"}) {
             const CheckResult* c = rep.find(name);
             o.expect(c != nullptr && c->passed, face(n) + " " + name);
           }
           o.expect(rep.info().at("dim_carrier") == std::to_string(n * n), face(n) + " dim _RH = N^2");
         }
       }},
      {3, "block decomposition into isomorphic Hopf algebras",
       [](Outcome& o) {
         for (unsigned n = 2; n <= 5; ++n) {
           const Report& rep = face_structure(n);
           o.expect(rep, face(n));
           for (const char* name : {"blocks.carrier_decomposition", "square.dimension", "square.block_support",
                                    "blocks.hopf_axioms", "blocks.isomorphic", "blocks.project_rh"})
             o.expect(rep.find(name) != nullptr, face(n) + " ran " + name);
           o.expect(rep.info().at("dim_square") == std::to_string(n * n * n), face(n) + " dim of truncated square");
         }
       }},
      {4, "braided Hopf algebra axioms for transmutations",
       [](Outcome& o) {
         for (const std::string name : {"face:2", "face:3", "sweedler", "group_zn:3"})
           o.expect(check_braided_hopf(*braided(name)), name);
       }},
      {5, "comodule / Yetter-Drinfeld equivalence round trip",
       [](Outcome& o) {
         for (const std::string name : {"face:2", "face:3", "sweedler"}) {
           const BraidedPtr b = braided(name);
           const Report rep = check_equivalence_roundtrip(b, standard_comodule_samples(b));
           o.expect(rep, name);
           o.expect(rep.find("roundtrip.monoidal") != nullptr, name + " monoidal check ran");
         }
       }},
      {6, "comodule braiding is invertible, natural and hexagonal",
       [](Outcome& o) {
         for (const std::string name : {"face:2", "sweedler"}) {
           const BraidedPtr b = braided(name);
           const Report rep = check_comodule_braiding(b, standard_comodule_samples(b), {17, 2});
           o.expect(rep, name);
           for (const char* c : {"comodule_braiding.inverse", "comodule_braiding.naturality", "comodule_braiding.hexagons"})
             o.expect(rep.find(c) != nullptr, name + " ran " + c);
         }
       }},
      {7, "_RH is the identity bi-Galois object",
       [](Outcome& o) {
         for (const std::string name : {"face:2", "face:3", "sweedler"}) {
           const BraidedPtr b = braided(name);
           const AlgebraObj a = rh_comodule_algebra(b);
           o.expect(is_galois(*a), name + " galois");
           o.expect(is_quantum_commutative(*a), name + " quantum commutative");
           o.expect(is_cocommutative(*a), name + " cocommutative");
           o.expect(check_identity_cotensor(b, standard_comodule_samples(b)), name + " _RH box M = M");
         }
       }},
      {8, "cocycle objects commute with the braided autoequivalence",
       [](Outcome& o) {
         const std::vector<std::pair<unsigned, long>> cases{{2, 1}, {2, 2}, {2, -1}, {3, 1}, {3, 2}};
         for (const auto& [n, a] : cases) {
           const BraidedPtr b = braided(face(n));
           const auto s = standard_comodule_samples(b);
           const AlgebraObj obj = cocycle_galois_object(b, n, 0, Scalar(a));
           const std::string at = face(n) + " a = " + std::to_string(a);
           o.expect(certify_qc_galois(*obj), at + " certification");
           o.expect(check_autoequivalence_diagram(*obj, {{s[2], s[2]}, {s[1], s[2]}}), at);
         }
       }},
      {9, "non-quantum-commutative control fails the diagram",
       [](Outcome& o) {
         const BraidedPtr b = braided("klein");
         const AlgebraObj k = twisted_klein_control(b);
         if (!is_galois(*k)) o.vacuous("twisted Klein control is not bi-Galois");
         o.expect(is_galois(*k), "control certifies as bi-Galois");
         o.expect(!is_quantum_commutative(*k), "control is not quantum commutative");
         const RHComodule rh = regular_comodule(b);
         const auto w = autoequivalence_witness(*k, rh, rh);
         o.expect(w.has_value() && w->expected != w->actual, "concrete witness at M = N = _RH");
         const Report rep = check_autoequivalence_diagram(*k, {{rh, rh}});
         o.expect(!rep.passed() && rep.first_failure()->name == "autoequivalence.diagram", "diagram check fails");
       }},
      {10, "group law on cocycle classes",
       [](Outcome& o) {
         const BraidedPtr b = braided("face:2");
         const std::vector<std::pair<Scalar, Scalar>> pairs{{Scalar(1), Scalar(2)},
                                                            {Scalar(2), Scalar(2)},
                                                            {Scalar(2), Scalar(-1)},
                                                            {Scalar(-1), Scalar(-1)},
                                                            {Scalar(2), Scalar::fraction(1, 2)}};
         for (const auto& [x, y] : pairs) {
           const std::string at = render_scalar(x) + " * " + render_scalar(y);
           const AlgebraObj ax = cocycle_galois_object(b, 2, 0, x), ay = cocycle_galois_object(b, 2, 0, y);
           o.expect(cocycle_group_probe(*ax, *ay, 2) == x * y, at + " probe");
           o.expect(cotensor_algebra(*ax, *ay)->dim() == b->dim(), at + " dimension");
           o.expect(check_group_law(*ax, *ay), at);
         }
         o.expect(same_cocycle_class(Scalar(2) * Scalar::fraction(1, 2), Scalar(1), 2) == std::optional<bool>(true),
                  "inverse pair gives the trivial class");
         for (long a : {2L, -1L}) {
           const AlgebraObj obj = cocycle_galois_object(b, 2, 0, Scalar(a));
           o.expect(check_inverse(*obj, inverse_galois_object(*obj)), "A box A^-1 for a = " + std::to_string(a));
         }
       }},
      {11, "certified bi-Galois objects are trivializable",
       [](Outcome& o) {
         for (const auto& [name, a] : galois_instances()) {
           if (!certify_qc_galois(*a).passed()) {
             o.vacuous(name + " does not certify");
             continue;
           }
           const auto& base = a->base;
           o.expect(check_trivializable(*a, {regular_module(base->base->algebra()), base->unit_module}, 7), name);
         }
       }},
      {12, "fixture serialization and corrupted fixtures",
       [](Outcome& o) {
         std::size_t count = 0;
         for (const auto& entry : fs::directory_iterator(kFixtures)) {
           if (entry.path().extension() != ".json") continue;
           ++count;
           o.expect(rewrite(entry.path()) == read_file(entry.path()), entry.path().filename().string() + " round trip");
         }
         o.expect(count == 20, "20 fixtures, found " + std::to_string(count));
         ScratchDir scratch;
         const auto cases = nlohmann::json::parse(read_file(kFixtures / "corrupted" / "expected.json"));
         for (const auto& c : cases) {
           const std::string file = c["file"];
           std::vector<std::string> args = c["command"];
           args.push_back((kFixtures / "corrupted" / file).string());
           std::string out;
           o.expect(cli(args, &out) == c["exit"].get<int>(), file + " exit code");
           const std::string check = c["check"];
           if (!check.empty())
             o.expect(out.find("first failure: ") != std::string::npos && out.find(": " + check) != std::string::npos,
                      file + " names " + check);
         }
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Outcome o;
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.passed() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << std::endl;
    for (const auto& n : o.notes()) std::cerr << "  " << n << "\n";
    for (const auto& f : o.failures()) std::cerr << "  " << f << "\n";
    if (!o.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "ALL PASSED" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
