#include <cmath>
#include <random>

#include "doctest.h"
#include "pbh/fields.hpp"

using namespace pbh;

namespace {

Eigen::VectorXd point4() {
  Eigen::VectorXd p(4);
  p << 0.3, -0.7, 1.2, 0.4;
  return p;
}

// A non-polynomial 1-form and 2-form with all components active.
Form one_form(const JVec& x) {
  Form w(4, 1);
  w.at_mask(1) = sin(x[1] * x[2]);
  w.at_mask(2) = x[0] * x[0] * x[3];
  w.at_mask(4) = exp(x[3] - x[0]);
  w.at_mask(8) = cos(x[0] + 2.0 * x[2]) * x[1];
  return w;
}

Form two_form(const JVec& x) {
  Form w(4, 2);
  int t = 1;
  for (int p = 0; p < w.size(); ++p, ++t) w[p] = sin(t * x[0] + x[1] * x[3]) + x[2] * t * x[(t + 1) % 4];
  return w;
}

JVec vec(const JVec& x, int s) {
  JVec v(4);
  for (int i = 0; i < 4; ++i) v[i] = cos(x[(i + s) % 4] * (1.0 + 0.3 * i)) + 0.2 * s * x[i];
  return v;
}

}  // namespace

TEST_CASE("d(x1 dx2) = dx1^dx2") {
  const JVec x = lift(point4(), 2);
  Form w(4, 1);
  w.at_mask(2) = x[0];
  const Form dw = d(w);
  for (int p = 0; p < dw.size(); ++p)
    CHECK(dw[p].value() == (dw.masks()[p] == 3u ? 1.0 : 0.0));
}

TEST_CASE("d of a constant Kaehler form vanishes") {
  const JVec x = lift(point4(), 2);
  Form w(4, 2);
  w.at_mask(3) = Jet(1.0);
  w.at_mask(12) = Jet(-1.0);
  CHECK(d(w).max_abs() == 0.0);
}

TEST_CASE("d squared vanishes") {
  const JVec x = lift(point4(), 3);
  CHECK(d(d(one_form(x))).max_abs() <= 1e-12);
  CHECK(d(d(two_form(x))).max_abs() <= 1e-12);
  Form f(4, 0);
  f[0] = exp(x[0] * x[1]) * sin(x[2] - x[3]);
  CHECK(d(d(f)).max_abs() <= 1e-12);
}

TEST_CASE("Kodaira coframe: d e4 = -e1^e2") {
  const JVec x = lift(point4(), 2);
  Form e4(4, 1);
  e4.at_mask(8) = Jet(1.0);
  e4.at_mask(2) = -x[0];
  const Form de4 = d(e4);
  Form e1(4, 1), e2(4, 1);
  e1.at_mask(1) = Jet(1.0);
  e2.at_mask(2) = Jet(1.0);
  CHECK((de4 + wedge(e1, e2)).max_abs() <= 1e-12);
}

TEST_CASE("evaluation and interior product on coordinate frames") {
  Form w(4, 2);
  w.at_mask(3) = Jet(1.0);
  JVec e1(4), e2(4);
  e1[0] = Jet(1.0);
  e2[1] = Jet(1.0);
  CHECK(evaluate(w, {e1, e2}).value() == 1.0);
  CHECK(evaluate(w, {e2, e1}).value() == -1.0);
  const Form i = interior(e1, w);
  CHECK(i.at_mask(2).value() == 1.0);
  CHECK(i.at_mask(1).value() == 0.0);
}

TEST_CASE("wedge algebra: graded commutativity, associativity, antiderivation") {
  const JVec x = lift(point4(), 1);
  const Form a = one_form(x), b = two_form(x);
  Form c(4, 1);
  for (int i = 0; i < 4; ++i) c.at_mask(1u << i) = x[i] * x[(i + 1) % 4] + 0.5;
  CHECK((wedge(a, b) - wedge(b, a)).max_abs() <= 1e-12);
  CHECK((wedge(a, c) + wedge(c, a)).max_abs() <= 1e-12);
  CHECK((wedge(wedge(a, c), b) - wedge(a, wedge(c, b))).max_abs() <= 1e-12);
  const JVec v = vec(x, 1);
  const Form lhs = interior(v, wedge(a, b));
  const Form rhs = wedge(interior(v, a), b) - wedge(a, interior(v, b));
  CHECK((lhs - rhs).max_abs() <= 1e-12);
  CHECK(interior(v, interior(v, b)).max_abs() <= 1e-12);
  CHECK(wedge(b, wedge(b, a)).max_abs() == 0.0);  // degree 5 > 4
}

TEST_CASE("pullback by a linear map matches evaluation on images") {
  const JVec x = lift(point4(), 1);
  const Form w = two_form(x);
  JMat A(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) A(i, j) = Jet(std::sin(1.0 + i + 2.0 * j));
  const Form pw = pullback_linear(A, w);
  const JVec u = vec(x, 2), v = vec(x, 3);
  CHECK(std::abs(evaluate(pw, {u, v}).value() - evaluate(w, {A * u, A * v}).value()) <= 1e-12);
}

TEST_CASE("matrix round trip of 2-forms") {
  const JVec x = lift(point4(), 1);
  const Form w = two_form(x);
  CHECK((Form::from_matrix(w.to_matrix()) - w).max_abs() == 0.0);
  const JMat m = w.to_matrix();
  CHECK((m + m.transpose()).max_abs() == 0.0);
}

TEST_CASE("Lie bracket of coordinate fields") {
  const JVec x = lift(point4(), 2);
  JVec d1(4), xd2(4);
  d1[0] = Jet(1.0);
  xd2[1] = x[0];
  const JVec b = lie_bracket(d1, xd2);
  CHECK(b[1].value() == 1.0);
  CHECK(b[0].value() == 0.0);
  JVec d2(4);
  d2[1] = Jet(1.0);
  CHECK(max_abs(lie_bracket(d1, d2)) == 0.0);
}

TEST_CASE("Lie bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 16; ++trial) {
    Eigen::VectorXd p(4);
    for (int i = 0; i < 4; ++i) p(i) = u(rng);
    const JVec x = lift(p, 2);
    const JVec X = vec(x, 0), Y = vec(x, 1), Z = vec(x, 2);
    CHECK(max_abs(lie_bracket(X, Y) + lie_bracket(Y, X)) <= 1e-12);
    const JVec j = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
                   lie_bracket(Z, lie_bracket(X, Y));
    CHECK(max_abs(j) <= 1e-10);
  }
}

TEST_CASE("Cartan formula: L_X d = d L_X") {
  const JVec x = lift(point4(), 3);
  const JVec X = vec(x, 1);
  const Form a = one_form(x);
  CHECK((lie_derivative(X, d(a)) - d(lie_derivative(X, a))).max_abs() <= 1e-11);
}
