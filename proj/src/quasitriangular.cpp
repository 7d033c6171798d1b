#include "whakit/quasitriangular.hpp"

#include "whakit/verify.hpp"

namespace whakit {

RMatrix::RMatrix(AlgebraPtr algebra, Tensor r, Tensor r_bar)
    : algebra_(std::move(algebra)), r_(std::move(r)), r_bar_(std::move(r_bar)) {
  const std::vector<std::size_t> dims{algebra_->dim(), algebra_->dim()};
  if (r_.dims() != dims || r_bar_.dims() != dims)
    throw Error(ErrorKind::DimensionMismatch, "R-matrix must be an element of H (x) H");
}

Tensor flip(const Tensor& t) { return permute(t, {1, 0}); }

Tensor leg12(const WeakHopfAlgebra& h, const Tensor& r) { return outer(r, h.one_elem()); }
Tensor leg23(const WeakHopfAlgebra& h, const Tensor& r) { return outer(h.one_elem(), r); }
Tensor leg13(const WeakHopfAlgebra& h, const Tensor& r) { return permute(outer(r, h.one_elem()), {0, 2, 1}); }

namespace {

std::optional<Witness> compare(const WeakHopfAlgebra& h, const std::string& where, const Tensor& a,
                               const Tensor& b) {
  if (a == b) return std::nullopt;
  auto render = tensor_renderer(h.leg_labels(a.legs()));
  return Witness{{where}, render(a.terms()), render(b.terms())};
}

std::optional<Witness> for_basis(const WeakHopfAlgebra& h, const Subspace& s, const std::string& var,
                                 const std::function<std::optional<Witness>(const Tensor&, const std::string&)>& f) {
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const auto& v = s.inclusion.column(k);
    if (auto w = f(h.elem(v), var + "=" + render_vec(v, &h.labels()))) return w;
  }
  return std::nullopt;
}

}  // namespace

Report check_quasitriangular(const RMatrix& rm) {
  const auto& H = rm.H();
  Report rep("quasitriangular structure on " + H.name());
  const Tensor& R = rm.r();
  const Tensor& Rb = rm.r_bar();
  const Tensor& D1 = H.delta_one();
  const Tensor D1cop = flip(D1);

  rep.run("r.membership", [&] { return compare(H, "R", H.product(H.product(D1cop, R), D1), R); });
  rep.run("r.comultiplied_second_leg", [&] {
    return compare(H, "R", H.comul(R, 1), H.product(leg13(H, R), leg12(H, R)));
  });
  rep.run("r.comultiplied_first_leg", [&] {
    return compare(H, "R", H.comul(R, 0), H.product(leg13(H, R), leg23(H, R)));
  });
  rep.run("r.intertwines_comultiplication", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < H.dim(); ++i) {
      Tensor d = H.comul(H.basis_elem(i), 0);
      if (auto w = compare(H, H.labels()[i], H.product(flip(d), R), H.product(R, d))) return w;
    }
    return std::nullopt;
  });
  rep.run("r_bar.membership", [&] { return compare(H, "R'", H.product(H.product(D1, Rb), D1cop), Rb); });
  rep.run("r_bar.right_inverse", [&] { return compare(H, "R R'", H.product(R, Rb), D1cop); });
  rep.run("r_bar.left_inverse", [&] { return compare(H, "R' R", H.product(Rb, R), D1); });
  rep.run("r.yang_baxter", [&] {
    Tensor r12 = leg12(H, R), r13 = leg13(H, R), r23 = leg23(H, R);
    return compare(H, "R", H.product(H.product(r12, r13), r23), H.product(H.product(r23, r13), r12));
  });
  rep.run("r.weak_inverse_sandwich", [&]() -> std::optional<Witness> {
    if (auto w = compare(H, "R R' R", H.product(H.product(R, Rb), R), R)) return w;
    return compare(H, "R' R R'", H.product(H.product(Rb, R), Rb), Rb);
  });
  rep.set_flag("triangular", Rb == flip(R));
  return rep;
}

Report check_derived_r_identities(const RMatrix& rm) {
  const auto& H = rm.H();
  Report rep("derived R-matrix identities on " + H.name());
  const Tensor& R = rm.r();
  const Tensor one = H.one_elem();
  const Tensor& D1 = H.delta_one();
  const auto internal = Severity::Internal;

  rep.run("r.target_slides_across", [&] {
    return for_basis(H, H.target(), "z", [&](const Tensor& z, const std::string& at) {
      return compare(H, at, H.product(outer(one, z), R), H.product(R, outer(z, one)));
    });
  }, internal);
  rep.run("r.source_slides_across", [&] {
    return for_basis(H, H.source(), "y", [&](const Tensor& y, const std::string& at) {
      return compare(H, at, H.product(outer(y, one), R), H.product(R, outer(one, y)));
    });
  }, internal);
  rep.run("r.target_left_antipode", [&] {
    return for_basis(H, H.target(), "z", [&](const Tensor& z, const std::string& at) {
      Tensor sz = H.elem(H.antipode(z.terms()));
      return compare(H, at, H.product(outer(z, one), R), H.product(outer(one, sz), R));
    });
  }, internal);
  rep.run("r.source_left_antipode", [&] {
    return for_basis(H, H.source(), "y", [&](const Tensor& y, const std::string& at) {
      Tensor sy = H.elem(H.antipode(y.terms()));
      return compare(H, at, H.product(outer(one, y), R), H.product(outer(sy, one), R));
    });
  }, internal);
  rep.run("r.source_right_antipode", [&] {
    return for_basis(H, H.source(), "y", [&](const Tensor& y, const std::string& at) {
      Tensor sy = H.elem(H.antipode(y.terms()));
      return compare(H, at, H.product(R, outer(y, one)), H.product(R, outer(one, sy)));
    });
  }, internal);
  rep.run("r.target_right_antipode", [&] {
    return for_basis(H, H.target(), "z", [&](const Tensor& z, const std::string& at) {
      Tensor sz = H.elem(H.antipode(z.terms()));
      return compare(H, at, H.product(R, outer(one, z)), H.product(R, outer(sz, one)));
    });
  }, internal);
  rep.run("r.source_counital_images", [&]() -> std::optional<Witness> {
    if (auto w = compare(H, "(eps_s (x) id)R", map_leg(R, 0, H.eps_s_map()), D1)) return w;
    return compare(H, "(id (x) eps_s)R", map_leg(R, 1, H.eps_s_map()), H.S(flip(D1), 0));
  }, internal);
  rep.run("r.target_counital_images", [&]() -> std::optional<Witness> {
    if (auto w = compare(H, "(eps_t (x) id)R", map_leg(R, 0, H.eps_t_map()), flip(D1))) return w;
    return compare(H, "(id (x) eps_t)R", map_leg(R, 1, H.eps_t_map()), H.S(D1, 0));
  }, internal);
  return rep;
}

RMatrixPtr certify_r(std::shared_ptr<RMatrix> r) {
  require_certified(r->H());
  Report rep = check_quasitriangular(*r);
  if (const auto* f = rep.first_failure())
    throw Error(ErrorKind::Uncertified, "R-matrix on " + r->H().name() + " fails " + f->name);
  r->certified_ = true;
  return r;
}

RMatrixPtr certify_r(AlgebraPtr algebra, Tensor r, Tensor r_bar) {
  return certify_r(std::make_shared<RMatrix>(std::move(algebra), std::move(r), std::move(r_bar)));
}

RCertification try_certify_r(AlgebraPtr algebra, Tensor r, Tensor r_bar) {
  require_certified(*algebra);
  auto m = std::make_shared<RMatrix>(std::move(algebra), std::move(r), std::move(r_bar));
  RCertification out{nullptr, check_quasitriangular(*m)};
  if (out.report.passed()) {
    m->certified_ = true;
    out.r = m;
  }
  return out;
}

void require_certified(const RMatrix& r) {
  if (!r.certified()) throw Error(ErrorKind::Uncertified, "R-matrix on " + r.H().name() + " has not been certified");
}

bool is_triangular(const RMatrix& r) { return r.r_bar() == flip(r.r()); }

std::optional<Tensor> solve_r_bar(const WeakHopfAlgebra& h, const Tensor& r) {
  const std::size_t d = h.dim();
  const std::size_t n = d * d;
  const Tensor& D1 = h.delta_one();
  const Tensor D1cop = flip(D1);
  auto basis = [&](std::size_t j) { return Tensor({d, d}, unit_vector(j)); };
  LinMap left = tabulate(n, n, [&](std::size_t j) { return h.product(r, basis(j)).terms(); });
  LinMap right = tabulate(n, n, [&](std::size_t j) { return h.product(basis(j), r).terms(); });
  LinMap member = tabulate(n, n, [&](std::size_t j) {
    return sub(h.product(h.product(D1, basis(j)), D1cop).terms(), unit_vector(j));
  });
  LinMap system = vstack(vstack(left, right), member);
  SparseVec rhs = D1cop.terms();
  for (const auto& e : D1.terms()) rhs.push_back(Entry{e.index + n, e.value});
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  return Tensor({d, d}, *x);
}

}  // namespace whakit
