// Regenerates tests/fixtures: round-trip bundles and corrupted inputs with the
// exit code and failing check each must produce.
//
//   make_fixtures <dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "whakit/bundle.hpp"
#include "whakit/face_algebra.hpp"
#include "whakit/verify.hpp"

using namespace whakit;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

BraidedPtr braided(const std::string& name) { return transmute(certify_presented(catalog(name)).r); }

std::string object_bundle(const ComoduleAlgebra& a, const std::string& ref) {
  return write_comodule_algebra_bundle(comodule_algebra_bundle(a, ref));
}

/// A_2 over face:2 with the B leg of the right coaction shifted in degree.
AlgebraObj shifted_grading(const AlgebraObj& a) {
  auto out = std::make_shared<ComoduleAlgebra>(*a);
  const std::size_t db = a->base->dim();
  const std::size_t n = 2;
  const LinMap& r = *a->right;
  out->right = tabulate(r.rows(), r.cols(), [&](std::size_t j) {
    SparseVec v;
    for (const auto& e : r.column(j)) {
      const Index m = e.index / db, q = e.index % db;
      v.push_back(Entry{m * db + (q / n) * n + (q % n + 1) % n, e.value});
    }
    normalize(v);
    return v;
  });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  const fs::path bad = dir / "corrupted";
  fs::create_directories(bad);

  for (const std::string name : {"sweedler", "group_zn:2", "group_zn:3", "klein", "face:2", "face:3"}) {
    std::string file = name;
    std::replace(file.begin(), file.end(), ':', '_');
    write(dir / (file + ".json"), write_algebra_bundle(catalog(name)));
  }

  for (const auto& [name, file] : std::vector<std::pair<std::string, std::string>>{
           {"sweedler", "rh_sweedler"}, {"group_zn:3", "rh_group_zn_3"}, {"face:2", "rh_face_2"}, {"face:3", "rh_face_3"}})
    write(dir / (file + ".json"), write_braided_bundle(braided_bundle(*braided(name), name)));

  const auto sweedler = braided("sweedler");
  const auto face2 = braided("face:2");
  const auto face3 = braided("face:3");
  const auto klein = braided("klein");

  const AlgebraPtr h_sw = sweedler->base->algebra();
  write(dir / "module_regular_sweedler.json", write_module_bundle(module_bundle(*regular_module(h_sw), "sweedler")));
  {
    const YDModule yd = induced_yd(*face2->base, regular_module(face2->base->algebra()));
    write(dir / "module_yd_face_2.json", write_module_bundle(module_bundle(*yd.module, "face_2.json", yd.coaction)));
  }
  {
    const RHComodule rh = regular_comodule(sweedler);
    write(dir / "module_rh_sweedler.json",
          write_module_bundle(module_bundle(*rh.module, "sweedler", std::nullopt, rh.coaction)));
  }

  write(dir / "object_rh_sweedler.json", object_bundle(*rh_comodule_algebra(sweedler), "sweedler"));
  write(dir / "object_rh_face_2.json", object_bundle(*rh_comodule_algebra(face2), "face_2.json"));
  write(dir / "klein_control.json", object_bundle(*twisted_klein_control(klein), "klein"));
  const AlgebraObj a2 = cocycle_galois_object(face2, 2, 0, Scalar(2));
  write(dir / "A_1.json", object_bundle(*cocycle_galois_object(face2, 2, 0, Scalar(1)), "face:2"));
  write(dir / "A_2.json", object_bundle(*a2, "face:2"));
  write(dir / "A_m1.json", object_bundle(*cocycle_galois_object(face2, 2, 1, Scalar(-1)), "face:2"));
  write(dir / "A_2_n3.json", object_bundle(*cocycle_galois_object(face3, 3, 0, Scalar(2)), "face_3.json"));

  json expected = json::array();
  auto expect = [&](const std::string& file, std::vector<std::string> command, int exit, const std::string& check) {
    expected.push_back({{"file", file}, {"command", command}, {"exit", exit}, {"check", check}});
  };

  // Antipode image of X^1_1(0) dropped.
  {
    PresentedAlgebra p = catalog("face:3");
    p.algebra.antipode.set_column(12, {});
    write(bad / "face_3_antipode_zeroed.json", write_algebra_bundle(p));
    expect("face_3_antipode_zeroed.json", {"check"}, 1, "antipode.");
  }
  // hg = gh instead of -gh.
  {
    PresentedAlgebra p = catalog("sweedler");
    p.algebra.mult.set_column(2 * 4 + 1, unit_vector(3));
    write(bad / "sweedler_commutative.json", write_algebra_bundle(p));
    expect("sweedler_commutative.json", {"check"}, 1, "algebra.associativity");
  }
  // R = 1 (x) 1 on Sweedler's algebra does not intertwine the comultiplication.
  {
    PresentedAlgebra p = catalog("sweedler");
    p.r = unit_vector(0);
    p.r_bar = unit_vector(0);
    write(bad / "sweedler_trivial_r.json", write_algebra_bundle(p));
    expect("sweedler_trivial_r.json", {"check"}, 1, "r.intertwines_comultiplication");
  }
  write(bad / "A_2_shifted_grading.json", object_bundle(*shifted_grading(a2), "face:2"));
  expect("A_2_shifted_grading.json", {"galois", "check"}, 1, "right.coassociative");
  write(bad / "klein_control.json", object_bundle(*twisted_klein_control(klein), "klein"));
  expect("klein_control.json", {"autoequiv-test"}, 1, "autoequivalence.diagram");

  write(bad / "truncated.json", write_algebra_bundle(catalog("group_zn:2")).substr(0, 80));
  expect("truncated.json", {"check"}, 2, "");
  {
    json doc = json::parse(write_algebra_bundle(catalog("group_zn:2")));
    doc["mult"][0][2] = 7;
    write(bad / "index_out_of_range.json", doc.dump(2) + "\n");
    expect("index_out_of_range.json", {"check"}, 2, "");
  }
  {
    json doc = json::parse(write_algebra_bundle(catalog("group_zn:2")));
    doc["unit"][0][1] = "w";
    write(bad / "root_in_rational_field.json", doc.dump(2) + "\n");
    expect("root_in_rational_field.json", {"check"}, 2, "");
  }
  {
    json doc = json::parse(write_algebra_bundle(catalog("group_zn:2")));
    doc["unit"][0][1] = 1;
    write(bad / "numeric_scalar.json", doc.dump(2) + "\n");
    expect("numeric_scalar.json", {"check"}, 2, "");
  }
  {
    json doc = json::parse(object_bundle(*a2, "face:2"));
    doc["algebra"] = "missing_algebra.json";
    write(bad / "A_2_missing_algebra.json", doc.dump(2) + "\n");
    expect("A_2_missing_algebra.json", {"galois", "check"}, 2, "");
  }
  {
    json doc = json::parse(object_bundle(*a2, "face:2"));
    doc["algebra"] = "klein";
    write(bad / "A_2_wrong_algebra.json", doc.dump(2) + "\n");
    expect("A_2_wrong_algebra.json", {"galois", "check"}, 2, "");
  }
  write(bad / "expected.json", expected.dump(2) + "\n");
  return 0;
}
