#include "whakit/examples.hpp"

#include "whakit/face_algebra.hpp"
#include "whakit/verify.hpp"

namespace whakit {

WeakHopfData present(std::string name, Field field, VectorSpace space,
                     const std::function<SparseVec(std::size_t, std::size_t)>& mult, SparseVec unit,
                     const std::function<SparseVec(std::size_t)>& comult,
                     const std::function<Scalar(std::size_t)>& counit,
                     const std::function<SparseVec(std::size_t)>& antipode) {
  const std::size_t d = space.dim;
  WeakHopfData data;
  data.name = std::move(name);
  data.field = field;
  data.space = std::move(space);
  data.mult = tabulate(d, d * d, [&](std::size_t ij) { return mult(ij / d, ij % d); });
  normalize(unit);
  data.unit = std::move(unit);
  data.comult = tabulate(d * d, d, comult);
  data.counit = tabulate(1, d, [&](std::size_t i) {
    Scalar c = counit(i);
    return c.is_zero() ? SparseVec{} : unit_vector(0, c);
  });
  data.antipode = tabulate(d, d, antipode);
  return data;
}

CertifiedPair certify_presented(const PresentedAlgebra& p) {
  CertifiedPair out;
  out.h = certify(p.algebra);
  if (p.r) {
    const std::size_t d = out.h->dim();
    Tensor r({d, d}, *p.r);
    Tensor r_bar;
    if (p.r_bar) {
      r_bar = Tensor({d, d}, *p.r_bar);
    } else {
      auto solved = solve_r_bar(*out.h, r);
      if (!solved) throw Error(ErrorKind::Uncertified, "R-matrix on " + out.h->name() + " has no weak inverse");
      r_bar = std::move(*solved);
    }
    out.r = certify_r(out.h, std::move(r), std::move(r_bar));
  }
  return out;
}

CertifiedPair certify_presented(const PresentedAlgebra& p, std::vector<Report>& reports) {
  CertifiedPair out;
  Certification c = try_certify(p.algebra);
  reports.push_back(std::move(c.report));
  if (!c.algebra || !p.r) {
    out.h = c.algebra;
    return out;
  }
  out.h = c.algebra;
  const std::size_t d = out.h->dim();
  Tensor r({d, d}, *p.r);
  Tensor r_bar;
  if (p.r_bar) {
    r_bar = Tensor({d, d}, *p.r_bar);
  } else if (auto solved = solve_r_bar(*out.h, r)) {
    r_bar = std::move(*solved);
  } else {
    Report rep("R-matrix on " + out.h->name());
    rep.fail("r_bar.solvable", Witness{{}, "a weak inverse", "none"});
    reports.push_back(std::move(rep));
    return out;
  }
  RCertification rc = try_certify_r(out.h, std::move(r), std::move(r_bar));
  reports.push_back(std::move(rc.report));
  out.r = rc.r;
  return out;
}

PresentedAlgebra sweedler() {
  // Basis index bits: g^a h^b with index a + 2b, i.e. 1, g, h, gh.
  VectorSpace space{4, {"1", "g", "h", "gh"}};
  auto g_part = [](std::size_t i) { return i & 1; };
  auto h_part = [](std::size_t i) { return i >> 1; };
  auto elem = [](std::size_t a, std::size_t b) { return a + 2 * b; };
  auto mult = [&](std::size_t i, std::size_t j) -> SparseVec {
    // (g^a h^b)(g^c h^d) = (-1)^{bc} g^{a+c} h^{b+d}
    const auto a = g_part(i), b = h_part(i), c = g_part(j), dd = h_part(j);
    if (b + dd > 1) return {};
    return unit_vector(elem((a + c) % 2, b + dd), Scalar((b * c) % 2 ? -1 : 1));
  };
  auto comult = [&](std::size_t i) -> SparseVec {
    // Delta(g) = g(x)g, Delta(h) = 1(x)h + h(x)g.
    const std::size_t d = 4;
    switch (i) {
      case 0: return unit_vector(0);
      case 1: return unit_vector(1 * d + 1);
      case 2: { SparseVec v{{0 * d + 2, Scalar(1)}, {2 * d + 1, Scalar(1)}}; normalize(v); return v; }
      default: { SparseVec v{{1 * d + 3, Scalar(1)}, {3 * d + 0, Scalar(1)}}; normalize(v); return v; }
    }
  };
  auto counit = [](std::size_t i) { return Scalar(i < 2 ? 1 : 0); };
  auto antipode = [](std::size_t i) -> SparseVec {
    switch (i) {
      case 0: return unit_vector(0);
      case 1: return unit_vector(1);
      case 2: return unit_vector(3);
      default: return unit_vector(2, Scalar(-1));
    }
  };
  PresentedAlgebra p;
  p.algebra = present("sweedler", Field::rational(), space, mult, unit_vector(0), comult, counit, antipode);
  const Scalar half = Scalar::fraction(1, 2);
  SparseVec r{{0 * 4 + 0, half}, {0 * 4 + 1, half}, {1 * 4 + 0, half}, {1 * 4 + 1, -half}};
  normalize(r);
  p.r = r;
  p.r_bar = r;
  return p;
}

namespace {

std::string power_label(const std::string& gen, std::size_t k) {
  if (k == 0) return "1";
  return k == 1 ? gen : gen + "^" + std::to_string(k);
}

PresentedAlgebra trivially_braided(WeakHopfData data) {
  PresentedAlgebra p;
  const std::size_t d = data.space.dim;
  SparseVec r;
  for (const auto& a : data.unit)
    for (const auto& b : data.unit) r.push_back(Entry{a.index * d + b.index, a.value * b.value});
  normalize(r);
  p.algebra = std::move(data);
  p.r = r;
  p.r_bar = r;
  return p;
}

}  // namespace

PresentedAlgebra group_zn(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "group order must be positive");
  VectorSpace space{n, {}};
  for (std::size_t k = 0; k < n; ++k) space.labels.push_back(power_label("g", k));
  auto data = present(
      "group_zn:" + std::to_string(n), Field::rational(), space,
      [&](std::size_t a, std::size_t b) { return unit_vector((a + b) % n); }, unit_vector(0),
      [&](std::size_t a) { return unit_vector(a * n + a); }, [](std::size_t) { return Scalar(1); },
      [&](std::size_t a) { return unit_vector((n - a) % n); });
  return trivially_braided(std::move(data));
}

PresentedAlgebra klein_four() {
  // Index a + 2b for the element (a, b) of Z_2 x Z_2.
  VectorSpace space{4, {"1", "a", "b", "ab"}};
  auto data = present(
      "klein", Field::rational(), space, [](std::size_t i, std::size_t j) { return unit_vector(i ^ j); },
      unit_vector(0), [](std::size_t i) { return unit_vector(i * 4 + i); }, [](std::size_t) { return Scalar(1); },
      [](std::size_t i) { return unit_vector(i); });
  return trivially_braided(std::move(data));
}

namespace {

std::optional<unsigned> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.size() > 4 || rest.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return static_cast<unsigned>(std::stoul(rest));
}

}  // namespace

bool in_catalog(const std::string& name) {
  return name == "sweedler" || name == "klein" || suffix_number(name, "group_zn:") || suffix_number(name, "face:");
}

PresentedAlgebra catalog(const std::string& name) {
  if (name == "sweedler") return sweedler();
  if (name == "klein") return klein_four();
  if (auto n = suffix_number(name, "group_zn:")) return group_zn(*n);
  if (auto n = suffix_number(name, "face:")) return face_algebra(*n);
  throw Error(ErrorKind::InvalidInput, "unknown algebra '" + name + "'");
}

}  // namespace whakit
