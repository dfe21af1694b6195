#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace biquat {

struct Axis {
  std::string name;
  double origin = 0.0;
  double step = 1e-3;
  int count = 5;
};

/// Tensor-product uniform grid over the parameters Phi_xi.  Central
/// differences with one refinement level need at least 5 points per axis.
struct ParameterGrid {
  std::vector<Axis> axes;

  explicit ParameterGrid(std::vector<Axis> a) : axes(std::move(a)) {
    if (axes.empty()) throw std::invalid_argument("ParameterGrid: no axes");
    for (const auto& ax : axes) {
      if (ax.step <= 0.0) throw std::invalid_argument("ParameterGrid: step must be positive");
      if (ax.count < 5)
        throw std::invalid_argument("ParameterGrid: at least 5 points per axis required");
    }
  }

  static ParameterGrid uniform_1d(const std::string& name, double origin, double step,
                                  int count) {
    return ParameterGrid({Axis{name, origin, step, count}});
  }

  int num_params() const { return static_cast<int>(axes.size()); }

  size_t num_points() const {
    size_t n = 1;
    for (const auto& ax : axes) n *= static_cast<size_t>(ax.count);
    return n;
  }

  /// Lexicographic flat index, last axis fastest.
  std::vector<double> coords(size_t flat) const {
    std::vector<double> c(axes.size());
    for (int i = num_params() - 1; i >= 0; --i) {
      const auto count = static_cast<size_t>(axes[i].count);
      c[i] = axes[i].origin + static_cast<double>(flat % count) * axes[i].step;
      flat /= count;
    }
    return c;
  }
};

/// Number of independent connection components, N = G p (p-1)/2 with p = 3.
constexpr int independent_connection_components(int num_params) { return 3 * num_params; }

/// Second-order central difference with one refinement level: the value is
/// taken at half step, the estimate is the Richardson disagreement.
template <class F>
struct DiffResult {
  F value;
  double error_estimate;
};

template <class F>
auto central_diff(F&& f, std::vector<double> coords, int axis, double h) {
  coords[axis] += h;
  auto fp = f(coords);
  coords[axis] -= 2.0 * h;
  auto fm = f(coords);
  return (1.0 / (2.0 * h)) * (fp - fm);
}

}  // namespace biquat
