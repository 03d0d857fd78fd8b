#pragma once

#include <algorithm>
#include <array>
#include <functional>

namespace forge {

struct NelderMeadOptions {
  double simplex_tol = 1e-10;  // absolute convergence on simplex diameter
  double initial_step = 0.1;
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::array<double, 2> x{};
  double fmin = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Standard downhill simplex in two dimensions (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2).
inline NelderMeadResult nelder_mead_2d(
    const std::function<double(double, double)>& f, std::array<double, 2> start,
    const NelderMeadOptions& opt = {}) {
  struct Vertex {
    std::array<double, 2> x;
    double fx;
  };
  NelderMeadResult result;
  auto eval = [&](std::array<double, 2> x) {
    ++result.evaluations;
    return f(x[0], x[1]);
  };

  std::array<Vertex, 3> v;
  v[0] = {start, eval(start)};
  v[1] = {{start[0] + opt.initial_step, start[1]}, 0.0};
  v[1].fx = eval(v[1].x);
  v[2] = {{start[0], start[1] + opt.initial_step}, 0.0};
  v[2].fx = eval(v[2].x);

  auto diameter = [&] {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        d = std::max(d, std::max(std::abs(v[i].x[0] - v[j].x[0]),
                                 std::abs(v[i].x[1] - v[j].x[1])));
    return d;
  };

  for (int it = 0; it < opt.max_iterations; ++it) {
    std::sort(v.begin(), v.end(),
              [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
    if (diameter() < opt.simplex_tol) {
      result.converged = true;
      break;
    }
    std::array<double, 2> centroid{0.5 * (v[0].x[0] + v[1].x[0]),
                                   0.5 * (v[0].x[1] + v[1].x[1])};
    auto point = [&](double coeff) {
      return std::array<double, 2>{centroid[0] + coeff * (centroid[0] - v[2].x[0]),
                                   centroid[1] + coeff * (centroid[1] - v[2].x[1])};
    };
    std::array<double, 2> xr = point(1.0);
    double fr = eval(xr);
    if (fr < v[0].fx) {
      std::array<double, 2> xe = point(2.0);
      double fe = eval(xe);
      v[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < v[1].fx) {
      v[2] = {xr, fr};
    } else {
      bool outside = fr < v[2].fx;
      std::array<double, 2> xc = point(outside ? 0.5 : -0.5);
      double fc = eval(xc);
      if (fc < (outside ? fr : v[2].fx)) {
        v[2] = {xc, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          v[i].x = {0.5 * (v[i].x[0] + v[0].x[0]), 0.5 * (v[i].x[1] + v[0].x[1])};
          v[i].fx = eval(v[i].x);
        }
      }
    }
  }
  std::sort(v.begin(), v.end(),
            [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
  result.x = v[0].x;
  result.fmin = v[0].fx;
  return result;
}

}  // namespace forge
