// Copyright 2026 The polyharm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernel_points.hpp"
#include "polyharm/error.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm::kernels {
namespace {

// The FFTW planner is not thread-safe; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwArray = std::unique_ptr<fftw_complex[], FftwFree>;

FftwArray fftw_array(std::size_t n) { return FftwArray(fftw_alloc_complex(n)); }

class BackwardPlan {
 public:
  explicit BackwardPlan(std::size_t n) {
    FftwArray in = fftw_array(n), out = fftw_array(n);
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~BackwardPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardPlan(const BackwardPlan&) = delete;
  BackwardPlan& operator=(const BackwardPlan&) = delete;

  void execute(fftw_complex* in, fftw_complex* out) const { fftw_execute_dft(plan_, in, out); }

 private:
  fftw_plan plan_;
};

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kDomain, "scan radius must lie in (0, 1)");
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

PairScan pair_scan(const PolyharmonicMap& map, double r, std::size_t samples, std::uint64_t seed) {
  check_radius(r);
  PairScan scan;
  scan.pairs = samples;
  scan.min_separation = std::numeric_limits<double>::infinity();
  const auto count = static_cast<long long>(samples);
#pragma omp parallel
  {
    detail::PairOutcome local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < count; ++i) {
      const detail::PairOutcome out = detail::test_pair(map, r, seed, static_cast<std::size_t>(i));
      local.compared += out.compared;
      local.min_separation = std::min(local.min_separation, out.min_separation);
      if (out.collision && (!local.collision || out.collision->pair_index < local.collision->pair_index)) {
        local.collision = out.collision;
      }
    }
#pragma omp critical(polyharm_pair_scan)
    {
      scan.compared += local.compared;
      scan.min_separation = std::min(scan.min_separation, local.min_separation);
      if (local.collision &&
          (!scan.collision || local.collision->pair_index < scan.collision->pair_index)) {
        scan.collision = local.collision;
      }
    }
  }
  return scan;
}

GridExtrema polar_grid_extrema(const PolyharmonicMap& map, double r, std::size_t m) {
  check_radius(r);
  double jacobian_min = std::numeric_limits<double>::infinity();
  double modulus_max = 0.0;
  const auto total = static_cast<long long>(m * m);
#pragma omp parallel for schedule(static) reduction(min : jacobian_min) reduction(max : modulus_max)
  for (long long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / m;
    const auto j = static_cast<std::size_t>(idx) % m;
    const Complex z = detail::polar_point(detail::grid_radius(r, i, m), j, m);
    jacobian_min = std::min(jacobian_min, metrics(map, z).jacobian);
    modulus_max = std::max(modulus_max, std::abs(eval(map, z)));
  }
  return {jacobian_min, modulus_max};
}

double circle_min_distance(const PolyharmonicMap& map, double r, std::size_t count, Complex center) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::kDomain, "circle radius must lie in (0, 1]");
  double best = std::numeric_limits<double>::infinity();
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long j = 0; j < n; ++j) {
    const Complex w = detail::polar_point(r, static_cast<std::size_t>(j), count);
    best = std::min(best, std::abs(eval(map, w) - center));
  }
  return best;
}

double polar_max_modulus(const PolyharmonicMap& map, std::size_t grid, double outer) {
  if (grid < 2) throw Error(ErrorCode::kDomain, "grid must be >= 2");
  if (!(outer > 0.0 && outer <= 1.0)) throw Error(ErrorCode::kDomain, "outer radius must lie in (0, 1]");

  const BackwardPlan plan(grid);
  const std::size_t p = map.order();
  const auto circles = static_cast<long long>(grid);
  double best = 0.0;
#pragma omp parallel
  {
    FftwArray bins = fftw_array(grid), values = fftw_array(grid);
    std::vector<double> layer_weight(p);
#pragma omp for schedule(dynamic, 8) reduction(max : best)
    for (long long i = 0; i < circles; ++i) {
      const double radius = outer * static_cast<double>(i) / static_cast<double>(grid - 1);
      std::memset(bins.get(), 0, sizeof(fftw_complex) * grid);
      bins[0][0] = map.a0().real();
      bins[0][1] = map.a0().imag();
      double w = 1.0;
      for (std::size_t k = 0; k < p; ++k) {
        layer_weight[k] = w;
        w *= radius * radius;
      }
      // Frequency +n carries a_{n,k} radius^{n+2(k-1)}, frequency -n carries
      // conj(b_{n,k}) radius^{n+2(k-1)}; both fold modulo the sample count.
      for (std::size_t k = 0; k < p; ++k) {
        const HarmonicLayer& layer = map.layer(k + 1);
        double rn = layer_weight[k];
        for (std::size_t n = 1; n <= layer.truncation(); ++n) {
          rn *= radius;
          if (rn == 0.0) break;
          const Complex pos = rn * layer.a(n);
          const Complex neg = rn * std::conj(layer.b(n));
          const std::size_t up = n % grid;
          const std::size_t down = (grid - up) % grid;
          bins[up][0] += pos.real();
          bins[up][1] += pos.imag();
          bins[down][0] += neg.real();
          bins[down][1] += neg.imag();
        }
      }
      plan.execute(bins.get(), values.get());
      for (std::size_t j = 0; j < grid; ++j) {
        best = std::max(best, std::hypot(values[j][0], values[j][1]));
      }
    }
  }
  return best;
}

}  // namespace parallel
}  // namespace polyharm::kernels
