#include <cmath>

#include "doctest.h"
#include "pbh/flag.hpp"

using namespace pbh;

namespace {

const Cp2Chart kCharts[] = {Cp2Chart::z, Cp2Chart::u, Cp2Chart::v};

std::vector<Eigen::VectorXd> cp2_points(int n, std::uint64_t seed) {
  return sample_points(cp2_domain(0.2), {n, seed});
}

}  // namespace

TEST_CASE("Fubini-Study determinant from jets matches (1 + |z|^2)^-3") {
  for (const auto& p : cp2_points(12, 3)) {
    const JVec x = lift(p, 2);
    const double closed = fs_det_closed(complex_coords(x)).value();
    CHECK(std::abs(fs_det_jet(x).value() - closed) <= 1e-12);
  }
}

TEST_CASE("Xf and Yf chart formulas agree with direct differentiation") {
  for (Cp2Chart c : kCharts)
    for (const auto& p : cp2_points(10, 5)) {
      const JVec x = lift(p, 3);
      CAPTURE(chart_name(c));
      CHECK(std::abs(cp2_Xf_closed(c, x).value() - cp2_Xf_direct(c, x).value()) <= 1e-9);
      CHECK(std::abs(cp2_Yf_closed(c, x).value() - cp2_Yf_direct(c, x).value()) <= 1e-9);
    }
}

TEST_CASE("Xf and Yf are chart independent") {
  for (const auto& p : cp2_points(10, 7))
    for (Cp2Chart to : {Cp2Chart::u, Cp2Chart::v}) {
      const Eigen::VectorXd q = cp2_transition(Cp2Chart::z, to, p);
      CHECK(std::abs(cp2_Xf_closed(Cp2Chart::z, lift(p, 0)).value() - cp2_Xf_closed(to, lift(q, 0)).value()) <= 1e-12);
      CHECK(std::abs(cp2_Yf_closed(Cp2Chart::z, lift(p, 0)).value() - cp2_Yf_closed(to, lift(q, 0)).value()) <= 1e-12);
    }
}

TEST_CASE("chart transitions round trip") {
  for (const auto& p : cp2_points(5, 9)) {
    const Eigen::VectorXd q = cp2_transition(Cp2Chart::v, Cp2Chart::z, cp2_transition(Cp2Chart::z, Cp2Chart::v, p));
    CHECK((q - p).norm() <= 1e-12);
  }
}

TEST_CASE("dd^c f is proportional to omega with lambda = -1") {
  for (const auto& p : cp2_points(8, 11)) {
    const RicciSample r = cp2_ricci(lift(p, 4));
    CHECK(std::abs(r.lambda() + 1.0) <= 1e-8);
    CHECK((r.ddc_f - 3.0 * r.lambda() * r.omega).norm() <= 1e-8);
  }
}

TEST_CASE("flag F0 is nondegenerate for (a, b) = (1, -2)") {
  const FlagParams fp;
  for (const auto& p : sample_points(flag_domain(0.1), {16, 13})) CHECK(flag_F0_min_singular(fp, p) > 1e-6);
  CHECK_THROWS(validate(FlagParams{1, 1}));
  CHECK_THROWS(validate(FlagParams{1, -1}));
}

TEST_CASE("flag fields Z1 and Z2 commute") {
  for (const auto& p : sample_points(flag_domain(0.1), {6, 15})) {
    const CVec c = complex_coords(lift(p, 1));
    const CVec z1 = flag_Z1(c), z2 = flag_Z2(c);
    for (int a = 0; a < 3; ++a) {
      CJet s;
      for (int b = 0; b < 3; ++b) s = s + z1[b] * d_holo(z2[a], b) - z2[b] * d_holo(z1[a], b);
      CHECK(std::abs(s.value()) <= 1e-14);
    }
  }
}

TEST_CASE("flag X^{1,0} satisfies both deformation conditions") {
  const FlagParams fp;
  for (const auto& p : sample_points(flag_domain(0.1), {32, 17})) {
    const JVec x = lift(p, 2);
    CHECK(flag_condition_i(fp, -1.0, x) <= 1e-6);
    CHECK(flag_condition_ii(fp, -1.0, x) <= 1e-8);
  }
}

TEST_CASE("flag condition (i) detects a wrong lambda") {
  const FlagParams fp;
  const auto pts = sample_points(flag_domain(0.1), {8, 19});
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, flag_condition_i(fp, -0.5, lift(p, 2)));
  CHECK(worst > 1e-3);
}
