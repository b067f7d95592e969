#include "pbh/fields.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

namespace pbh {

bool ChartDomain::in_box(const Eigen::VectorXd& p, double slack) const {
  if (p.size() != dim) return false;
  for (int i = 0; i < dim; ++i)
    if (p(i) < lo(i) - slack || p(i) > hi(i) + slack) return false;
  return true;
}

bool ChartDomain::clear_of_loci(const Eigen::VectorXd& p) const {
  for (const auto& e : excluded)
    if (!(std::abs(e.predicate(p)) > e.margin)) return false;
  return true;
}

void ChartDomain::validate() const {
  if (dim <= 0 || lo.size() != dim || hi.size() != dim) throw std::invalid_argument("chart dimension mismatch");
  for (int i = 0; i < dim; ++i)
    if (!(hi(i) > lo(i))) throw std::invalid_argument("chart box has zero volume");
  for (const auto& e : excluded)
    if (e.margin < 0.0) throw std::invalid_argument("negative exclusion margin");
}

std::vector<Eigen::VectorXd> sample_points(const ChartDomain& domain, const SamplePlan& plan) {
  domain.validate();
  std::mt19937_64 rng(plan.seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Eigen::VectorXd> pts;
  long attempts = 0;
  while (static_cast<int>(pts.size()) < plan.count) {
    if (++attempts > 1000L * std::max(plan.count, 1)) throw DomainError("sampler rejected too many points");
    Eigen::VectorXd p(domain.dim);
    for (int i = 0; i < domain.dim; ++i) p(i) = domain.lo(i) + (domain.hi(i) - domain.lo(i)) * unit();
    if (domain.clear_of_loci(p)) pts.push_back(p);
  }
  return pts;
}

JVec lift(const Eigen::VectorXd& p, int order) {
  const int n = static_cast<int>(p.size());
  JVec x(n);
  for (int i = 0; i < n; ++i) x[i] = Jet::variable(n, order, i, p(i));
  return x;
}

Jet directional(const JVec& x, const Jet& f) {
  Jet s;
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j].dim() == 0 && x[j].value() == 0.0) continue;
    s += x[j] * f.derivative(static_cast<int>(j));
  }
  return s;
}

JVec directional(const JVec& x, const JVec& v) {
  JVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = directional(x, v[i]);
  return r;
}

JVec lie_bracket(const JVec& x, const JVec& y) { return directional(x, y) - directional(y, x); }

Form lie_derivative(const JVec& x, const Form& w) {
  Form r = interior(x, d(w));
  if (w.degree() > 0) r += d(interior(x, w));
  return r;
}

JVec gradient(const Jet& f) {
  JVec g(f.dim());
  for (int i = 0; i < f.dim(); ++i) g[i] = f.derivative(i);
  return g;
}

FormField exterior_derivative(FormField w) {
  return [w = std::move(w)](const JVec& x) { return d(w(x)); };
}

VectorField lie_bracket(VectorField x, VectorField y) {
  return [x = std::move(x), y = std::move(y)](const JVec& p) { return lie_bracket(x(p), y(p)); };
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  // Report the lowest failing index so error output does not depend on scheduling.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

JMat lie_derivative(const JVec& v, const JMat& p) {
  const int n = p.rows();
  JMat r(n, n), dv(n, n);  // dv(i, k) = d_k V^i
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) dv(i, k) = v[i].derivative(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = directional(v, p(i, j));
  return r - dv * p - p * dv.transpose();
}

}  // namespace pbh
