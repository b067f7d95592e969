#include <cmath>

#include "doctest.h"
#include "pbh/engel.hpp"
#include "pbh/example2.hpp"

using namespace pbh;

namespace {

ChartDomain unit_box(int n) {
  ChartDomain d;
  d.dim = n;
  d.lo = Eigen::VectorXd::Constant(n, -1.0);
  d.hi = Eigen::VectorXd::Constant(n, 1.0);
  return d;
}

std::vector<Eigen::VectorXd> torus_points(int n, std::uint64_t seed) {
  return sample_points(inner_domain(torus_phk().domain, 0.5), {n, seed});
}

LeeFields deformed_fields(const Eigen::VectorXd& p, int order = 4) {
  Example2Params par;
  par.t = 0.1;
  const BihermitianExtract e = deformed_bihermitian(torus_phk(), par, lift(p, order));
  return lee_fields(e.g, e.Jp, e.Jm);
}

}  // namespace

TEST_CASE("rank tower of the Engel normal form is (2,3,4)") {
  for (const RankTowerReport& r : rank_tower(engel_normal_form(), unit_box(4), {16, 1})) {
    CHECK(r.r1 == 2);
    CHECK(r.r2 == 3);
    CHECK(r.r3 == 4);
    CHECK(r.verdict == TowerVerdict::engel);
  }
}

TEST_CASE("rank tower of coordinate and contact-type spans") {
  const std::vector<VectorField> flat = {[](const JVec&) { return JVec{Jet(1.0), Jet(), Jet(), Jet()}; },
                                         [](const JVec&) { return JVec{Jet(), Jet(1.0), Jet(), Jet()}; }};
  for (const RankTowerReport& r : rank_tower(flat, unit_box(4), {4, 2})) {
    CHECK(r.r1 == 2);
    CHECK(r.r2 == 2);
    CHECK(r.r3 == 2);
    CHECK(r.verdict == TowerVerdict::integrable);
  }
  // [d1, x1 d2 + d3] = d2, and further brackets vanish.
  const std::vector<VectorField> heis = {[](const JVec&) { return JVec{Jet(1.0), Jet(), Jet(), Jet()}; },
                                         [](const JVec& x) { return JVec{Jet(), x[0], Jet(1.0), Jet()}; }};
  for (const RankTowerReport& r : rank_tower(heis, unit_box(4), {4, 3})) {
    CHECK(r.r2 == 3);
    CHECK(r.r3 == 3);
    CHECK(r.verdict == TowerVerdict::other);
  }
  const std::vector<VectorField> dependent = {flat[0], flat[0]};
  CHECK_THROWS_AS(rank_tower(dependent, unit_box(4), {1, 4}), DegeneracyError);
}

TEST_CASE("subspace distance") {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(4, 2);
  Eigen::MatrixXd b(4, 2);
  b << 1, 1, 1, -1, 0, 0, 0, 0;
  CHECK(subspace_distance(a, b) <= 1e-15);
  Eigen::MatrixXd c = a;
  c(2, 1) = 1.0;
  CHECK(subspace_distance(a, c) == doctest::Approx(std::sqrt(0.5)));
  CHECK(kernel_basis(a.transpose()).cols() == 2);
}

TEST_CASE("N+- on the constant torus pair: nilpotent with kernel = image = K eigenspace") {
  const ModelDescriptor m = torus_phk();
  const Example2Point e = example2_at(m, Example2Params{}, lift(torus_points(1, 5)[0], 0));
  const NEndos n = n_endos(e.Jp, e.Jm);
  CHECK(n.p.value() == doctest::Approx(-1.25));
  const NEndosReport r = check_n_endos(n);
  CHECK(r.square <= 1e-12);
  CHECK(r.rank_plus == 2);
  CHECK(r.rank_minus == 2);
  CHECK(r.rank_kernels == 4);
  CHECK(r.kernel_image <= 1e-8);
  CHECK(r.kernel_eigen <= 1e-8);
  CHECK(r.eigen_annihilated <= 1e-10);
}

TEST_CASE("null frame identities with a prescribed Lee form") {
  const ModelDescriptor m = torus_phk();
  const Example2Point e = example2_at(m, Example2Params{}, lift(torus_points(1, 6)[0], 0));
  for (const Eigen::Vector4d th : {Eigen::Vector4d(0.3, -0.1, 0.2, 0.05), Eigen::Vector4d(1.0, 2.0, 0.0, -0.5)}) {
    const LeeFields L = lee_fields_with(e.g, e.Jp, e.Jm, constant_vec(th));
    REQUIRE(L.definitive);
    const BasisResiduals b = basis_identities(L);
    CHECK(b.null_xy <= 1e-12);
    CHECK(b.jx_y <= 1e-12);
    CHECK(b.f_square <= 1e-12);
    CHECK(b.theta_pp <= 1e-12);
    CHECK(b.y_closed <= 1e-12);
    CHECK(b.kernel <= 1e-12);
    CHECK(b.anticommutator <= 1e-12);
    CHECK(b.frame_sigma > 1e-3);
    const double f = L.f.value(), p = L.p.value();
    CHECK(bilinear(L.g, L.Jp * L.X, L.Y).value() / L.norm2.value() == doctest::Approx(2.0 * (f * p - 1.0)));
    // The (1 - K) theta alternative leaves Ker N.
    CHECK(max_abs(L.N * (L.theta - L.K * L.theta)) > 1e-3);
  }
}

TEST_CASE("vanishing Lee form makes every point inconclusive") {
  const ModelDescriptor m = torus_phk();
  for (const auto& p : torus_points(4, 7)) {
    const Example2Point e = example2_at(m, Example2Params{}, lift(p, 3));
    const LeeFields L = lee_fields(e.g, e.Jp, e.Jm);
    CHECK_FALSE(L.definitive);
    CHECK(theorem7_point(L).branch == Theorem7Branch::inconclusive);
    // p is constant here, and so is the Lee form: dp = sqrt(p^2-1) theta o K holds trivially.
    CHECK(max_abs(gradient(L.p)) <= 1e-14);
    CHECK(max_abs(L.theta_p) <= 1e-14);
  }
}

TEST_CASE("null frame and derivative identities on the Hamiltonian-deformed pair") {
  for (const auto& p : torus_points(6, 8)) {
    const LeeFields L = deformed_fields(p);
    REQUIRE(L.definitive);
    CHECK(L.balance <= 1e-10);
    CHECK(std::abs(L.norm2.value()) > 1e-4);
    CHECK(max_abs(gradient(L.p)) > 1e-3);
    const BasisResiduals b = basis_identities(L);
    CHECK(b.null_xy <= 1e-8);
    CHECK(b.jx_y <= 1e-8);
    CHECK(b.theta_pp <= 1e-8);
    CHECK(b.kernel <= 1e-9);
    CHECK(b.anticommutator <= 1e-10);
    const DerivativeResiduals d = derivative_identities(L);
    CHECK(d.dp_k <= 1e-8);
    CHECK(d.x_f <= 1e-8);
    CHECK(d.y_f <= 1e-8);
    CHECK(d.nxy_parallel <= 1e-8);
    CHECK(d.nxy_coeff <= 1e-8);
    CHECK(d.nabla_n_yy <= 1e-8);
    CHECK(d.nabla_n_jyy <= 1e-8);
    CHECK(d.nabla_n_formula <= 1e-8);
  }
}

TEST_CASE("deformed pair falls on the Engel side of the dichotomy") {
  for (const auto& p : torus_points(4, 9)) {
    const Theorem7Point t = theorem7_point(deformed_fields(p));
    CHECK(t.x_component > 1e-3);
    CHECK(t.tower.verdict == TowerVerdict::engel);
    CHECK(t.branch == Theorem7Branch::engel);
  }
}
