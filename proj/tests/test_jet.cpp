#include <cmath>

#include "doctest.h"
#include "pbh/fields.hpp"
#include "pbh/jet.hpp"

using namespace pbh;

TEST_CASE("product of coordinates has the expected partials") {
  Eigen::VectorXd p(4);
  p << 2, 3, 0, 0;
  const JVec x = lift(p, 3);
  const Jet f = x[0] * x[1];
  CHECK(f.value() == 6.0);
  CHECK(f.partial({1, 0, 0, 0}) == 3.0);
  CHECK(f.partial({0, 1, 0, 0}) == 2.0);
  CHECK(f.partial({1, 1, 0, 0}) == 1.0);
  CHECK(f.partial({2, 0, 0, 0}) == 0.0);
}

TEST_CASE("coordinate function has vanishing higher partials") {
  Eigen::VectorXd p(4);
  p << 0.1, -0.2, 0.7, 1.3;
  const Jet f = lift(p, 3)[2];
  CHECK(f.partial({0, 0, 1, 0}) == 1.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MultiIndex a{};
      a[i] += 1;
      a[j] += 1;
      CHECK(f.partial(a) == 0.0);
      a[2] += 1;
      CHECK(f.partial(a) == 0.0);
    }
}

TEST_CASE("elementary functions match closed-form derivatives") {
  Eigen::VectorXd p(2);
  p << 0.4, 1.3;
  const JVec x = lift(p, 4);
  const double u = 0.4, v = 1.3;
  // g = sin(u v): d/du = v cos, d2/du2 = -v^2 sin, d3/du2dv = -2v sin - v^2 u cos
  const Jet g = sin(x[0] * x[1]);
  CHECK(g.partial({1, 0}) == doctest::Approx(v * std::cos(u * v)).epsilon(1e-14));
  CHECK(g.partial({2, 0}) == doctest::Approx(-v * v * std::sin(u * v)).epsilon(1e-14));
  CHECK(g.partial({2, 1}) ==
        doctest::Approx(-2 * v * std::sin(u * v) - v * v * u * std::cos(u * v)).epsilon(1e-13));
  // h = exp(u) / (1 + v^2): d4/dv4 of 1/(1+v^2) via its closed form.
  const Jet h = exp(x[0]) / (1.0 + x[1] * x[1]);
  const double d4 = 24 * (5 * std::pow(v, 4) - 10 * v * v + 1) / std::pow(1 + v * v, 5);
  CHECK(h.partial({0, 4}) == doctest::Approx(std::exp(u) * d4).epsilon(1e-12));
  // log and sqrt
  const Jet l = log(x[1]) + sqrt(x[0]);
  CHECK(l.partial({0, 3}) == doctest::Approx(2.0 / (v * v * v)).epsilon(1e-14));
  CHECK(l.partial({3, 0}) == doctest::Approx(3.0 / 8.0 * std::pow(u, -2.5)).epsilon(1e-14));
  const Jet q = pow(x[1], -1.5);
  CHECK(q.partial({0, 2}) == doctest::Approx(-1.5 * -2.5 * std::pow(v, -3.5)).epsilon(1e-14));
  CHECK(cos(x[0]).partial({4, 0}) == doctest::Approx(std::cos(u)).epsilon(1e-14));
}

TEST_CASE("first partials agree with central differences to second order") {
  auto f = [](const JVec& x) { return exp(sin(x[0]) * x[1]) / (2.0 + cos(x[2] * x[3])) + log(3.0 + x[0] * x[3]); };
  Eigen::VectorXd p(4);
  p << 0.3, -0.8, 1.1, 0.5;
  const Jet j = f(lift(p, 3));
  const double h = 1e-4;
  for (int i = 0; i < 4; ++i) {
    Eigen::VectorXd a = p, b = p;
    a(i) += h;
    b(i) -= h;
    const double fd = (f(lift(a, 0)).value() - f(lift(b, 0)).value()) / (2 * h);
    MultiIndex m{};
    m[i] = 1;
    CHECK(std::abs(j.partial(m) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("derivative consumes one order and stops at zero") {
  Eigen::VectorXd p(3);
  p << 1, 2, 3;
  const JVec x = lift(p, 2);
  const Jet f = x[0] * x[0] * x[1];
  const Jet fx = f.derivative(0);
  CHECK(fx.order() == 1);
  CHECK(fx.value() == doctest::Approx(4.0));
  const Jet fxy = fx.derivative(1);
  CHECK(fxy.order() == 0);
  CHECK(fxy.value() == doctest::Approx(2.0));
  CHECK_THROWS_AS(fxy.derivative(0), OrderExhausted);
}

TEST_CASE("capacity limits by dimension") {
  CHECK(max_order_for_dim(4) == 4);
  CHECK(max_order_for_dim(6) == 3);
  CHECK_NOTHROW(Jet::variable(6, 3, 5, 1.0));
  CHECK_THROWS(Jet::variable(6, 4, 0, 1.0));
}

TEST_CASE("mixed orders truncate to the lower order") {
  Eigen::VectorXd p(2);
  p << 0.5, 0.25;
  const Jet a = lift(p, 3)[0];
  const Jet b = lift(p, 1)[1];
  CHECK((a * b).order() == 1);
  CHECK((a + b).order() == 1);
  CHECK((2.0 * a).order() == 3);
}

TEST_CASE("sampling is deterministic and respects excluded loci") {
  ChartDomain dom;
  dom.dim = 2;
  dom.lo = Eigen::Vector2d(-1, -1);
  dom.hi = Eigen::Vector2d(1, 1);
  dom.excluded.push_back({"axis", [](const Eigen::VectorXd& q) { return q(0); }, 0.2});
  const auto a = sample_points(dom, {32, 7});
  const auto b = sample_points(dom, {32, 7});
  REQUIRE(a.size() == 32);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(std::abs(a[i](0)) > 0.2);
  }
  Eigen::VectorXd out(2);
  out << 2.0, 0.0;
  CHECK_THROWS_AS(lift_to_jets([](const JVec& x) { return x[0]; }, dom, out), DomainError);
}
