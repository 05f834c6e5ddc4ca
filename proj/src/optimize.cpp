#include "norts/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace norts {

NelderMeadResult nelder_mead(const std::function<double(const Vector&)>& objective, const Vector& x0,
                             const Vector& steps, const NelderMeadOptions& options) {
  const Eigen::Index dim = x0.size();
  if (steps.size() != dim) throw InvalidInput("nelder_mead: steps and x0 differ in size");

  std::vector<Vector> vertex(dim + 1, x0);
  std::vector<double> value(dim + 1);
  for (Eigen::Index i = 0; i < dim; ++i) vertex[i + 1][i] += steps[i];
  for (std::size_t i = 0; i < vertex.size(); ++i) value[i] = objective(vertex[i]);

  std::vector<std::size_t> order(vertex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return value[a] < value[b]; });
  };

  NelderMeadResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    sort_simplex();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double x_spread = 0.0;
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      x_spread = std::max(x_spread, (vertex[i] - vertex[best]).cwiseAbs().maxCoeff());
    }
    if (value[worst] - value[best] <= options.f_tolerance && x_spread <= options.x_tolerance) {
      result.converged = true;
      break;
    }

    Vector centroid = Vector::Zero(dim);
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      if (i != worst) centroid += vertex[i];
    }
    centroid /= static_cast<double>(dim);

    const Vector reflected = centroid + (centroid - vertex[worst]);
    const double f_reflected = objective(reflected);
    if (f_reflected < value[best]) {
      const Vector expanded = centroid + 2.0 * (centroid - vertex[worst]);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    // Contraction: outside if the reflection improved on the worst point, inside otherwise.
    const bool outside = f_reflected < value[worst];
    const Vector contracted = outside ? Vector(centroid + 0.5 * (reflected - centroid))
                                      : Vector(centroid + 0.5 * (vertex[worst] - centroid));
    const double f_contracted = objective(contracted);
    if (f_contracted < (outside ? f_reflected : value[worst])) {
      vertex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      if (i == best) continue;
      vertex[i] = vertex[best] + 0.5 * (vertex[i] - vertex[best]);
      value[i] = objective(vertex[i]);
    }
  }
  sort_simplex();
  result.x = vertex[order.front()];
  result.value = value[order.front()];
  result.iterations = iter;
  return result;
}

}  // namespace norts
