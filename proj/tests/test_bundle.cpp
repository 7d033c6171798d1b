#include <doctest.h>

#include <filesystem>
#include <map>

#include "helpers.hpp"
#include "whakit/bundle.hpp"

using namespace whakit;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = WHAKIT_FIXTURE_DIR;

/// Parses and rewrites a fixture of any kind.
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

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_SUITE("bundle") {
  TEST_CASE("fixtures round-trip byte for byte") {
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(kFixtures)) {
      if (entry.path().extension() != ".json") continue;
      INFO(entry.path().filename().string());
      CHECK(rewrite(entry.path()) == read_file(entry.path()));
      ++count;
    }
    CHECK(count == 20);
  }

  TEST_CASE("catalog algebras survive a round trip and still certify") {
    for (const std::string name : {"sweedler", "group_zn:3", "face:2"}) {
      const PresentedAlgebra p = catalog(name);
      const PresentedAlgebra q = parse_algebra_bundle(write_algebra_bundle(p));
      CHECK(map_eq(p.algebra.mult, q.algebra.mult));
      CHECK(map_eq(p.algebra.comult, q.algebra.comult));
      CHECK(vec_equal(*p.r, *q.r));
      CHECK(certify_presented(q).r != nullptr);
    }
  }

  TEST_CASE("reloaded comodule algebras certify") {
    const ResolvedAlgebra r = resolve_algebra("face_2.json", kFixtures);
    const std::string text = read_file(kFixtures / "A_2.json");
    const AlgebraObj a = to_comodule_algebra(parse_comodule_algebra_bundle(text, r.context()), r.braided);
    CHECK(certify_qc_galois(*a).passed());
  }

  TEST_CASE("entries are sorted and scalars canonical") {
    const std::string text = R"({"name": "z2", "field": {"type": "rational"}, "dim": 2,
      "mult": [[1, 1, 0, "2/2"], [0, 1, 1, "1"], [0, 0, 0, "1"], [1, 0, 1, "1"]],
      "unit": [[0, "1"]], "comult": [[1, 1, 1, "1"], [0, 0, 0, "1"]], "counit": [[1, "1"], [0, "1"]],
      "antipode": [[1, 1, "1"], [0, 0, "1"]]})";
    const std::string out = write_algebra_bundle(parse_algebra_bundle(text));
    CHECK(out.find(R"([0, 0, 0, "1"],
    [0, 1, 1, "1"],
    [1, 0, 1, "1"],
    [1, 1, 0, "1"])") != std::string::npos);
    CHECK(out.find("basis_labels") != std::string::npos);
    CHECK(write_algebra_bundle(parse_algebra_bundle(out)) == out);
  }

  TEST_CASE("malformed input") {
    CHECK(kind_of([] { parse_algebra_bundle("{"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_algebra_bundle("[1]"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_algebra_bundle(R"({"name": "x"})"); }) == ErrorKind::InvalidInput);
    std::string z2 = write_algebra_bundle(group_zn(2));
    const std::string bad_field = std::string(z2).replace(z2.find("rational"), 8, "complex");
    CHECK(kind_of([&] { parse_algebra_bundle(bad_field); }) == ErrorKind::InvalidInput);
    const std::string bad_scalar = std::string(z2).replace(z2.find("\"1\"]"), 3, "\"w\"");
    CHECK(kind_of([&] { parse_algebra_bundle(bad_scalar); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { read_file("/nonexistent/bundle.json"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { resolve_algebra("no_such_catalog_entry", "."); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("bundle kinds") {
    CHECK(detect_bundle_kind(read_file(kFixtures / "face_2.json")) == BundleKind::Algebra);
    CHECK(detect_bundle_kind(read_file(kFixtures / "rh_face_2.json")) == BundleKind::Braided);
    CHECK(detect_bundle_kind(read_file(kFixtures / "module_yd_face_2.json")) == BundleKind::Module);
    CHECK(detect_bundle_kind(read_file(kFixtures / "A_2.json")) == BundleKind::ComoduleAlgebra);
  }
}
