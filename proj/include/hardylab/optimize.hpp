#pragma once
//
// Coefficient-space search for the worst-case shift ratio at fixed exponent
// and degree, under the gauge a_0 = 1. Multi-restart Nelder-Mead over the
// 2d real parameters (Re a_k, Im a_k), fully deterministic: restarts run
// sequentially with per-restart derived seeds and index-stable tie-breaks.
//

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardylab/defaults.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/shift.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

struct SearchConfig {
  PExponent p{1.0};
  int degree = kDefaultDegree;
  std::size_t grid_n = kDefaultGridN;
  int restarts = kDefaultRestarts;
  int max_iters = kDefaultMaxIters;  // per restart
  double tol = kDefaultTol;          // simplex diameter stop
  std::uint64_t seed = kDefaultSeed;
  // Optional full coefficient vector (1, a_1, ..., a_d) seeding restart 0;
  // lets sweeps chain solutions across degrees.
  std::optional<std::vector<cplx>> warm_start;

  void validate() const {
    if (degree < 1) throw std::invalid_argument("SearchConfig: need degree >= 1");
    if (grid_n < 4 || !is_pow2(grid_n))
      throw std::invalid_argument("SearchConfig: grid size must be a power of two, N >= 4");
    if (grid_n <= static_cast<std::size_t>(degree))
      throw std::invalid_argument("SearchConfig: grid size must exceed degree");
    if (restarts < 1) throw std::invalid_argument("SearchConfig: need restarts >= 1");
    if (max_iters < 1) throw std::invalid_argument("SearchConfig: need max_iters >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("SearchConfig: need tol > 0");
    if (warm_start && warm_start->size() != static_cast<std::size_t>(degree) + 1)
      throw std::invalid_argument("SearchConfig: warm start must have degree+1 coefficients");
    if (warm_start && (*warm_start)[0] != cplx{1.0, 0.0})
      throw std::invalid_argument("SearchConfig: warm start must satisfy a_0 = 1");
  }
};

struct SearchResult {
  TaylorCoeffs coeffs;  // best point found, a_0 = 1
  RatioReport best;
  int iterations = 0;      // total Nelder-Mead iterations across restarts
  bool converged = false;  // every restart hit the diameter tolerance
  // (iteration, best ratio so far), appended on improvement; nondecreasing.
  std::vector<std::pair<int, double>> history;
};

namespace detail {

inline std::vector<cplx> params_to_coeffs(const std::vector<double>& q) {
  std::vector<cplx> c(q.size() / 2 + 1);
  c[0] = cplx{1.0, 0.0};
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = cplx{q[2 * k - 2], q[2 * k - 1]};
  return c;
}

// Ratio objective. The ratio is scale invariant, so runaway simplex points
// are renormalized by an exact power of two before evaluation; this keeps
// the quadrature in range without moving the objective value.
inline double ratio_objective(const std::vector<double>& q, const PExponent& p, std::size_t n) {
  std::vector<cplx> c = params_to_coeffs(q);
  double amax = 1.0;
  for (const cplx& a : c) amax = std::max(amax, std::abs(a));
  if (!std::isfinite(amax)) return -std::numeric_limits<double>::infinity();
  if (amax > 1e3) {
    const double scale = std::exp2(-std::ceil(std::log2(amax)));
    for (cplx& a : c) a *= scale;
  }
  const double r = ratio_report(TaylorCoeffs(std::move(c)), p, n).ratio;
  return std::isfinite(r) ? r : -std::numeric_limits<double>::infinity();
}

// Canonical start point: the degree-d truncation of the extremal family
// member at lambda = 1/sqrt(3), whose Taylor coefficients are a_0 = 1,
// a_k = 4 k lambda^k.
inline std::vector<double> truncated_extremal_params(int degree) {
  std::vector<double> q(2 * static_cast<std::size_t>(degree), 0.0);
  double lk = 1.0;
  for (int k = 1; k <= degree; ++k) {
    lk *= kExtremalLambda;
    q[2 * static_cast<std::size_t>(k) - 2] = 4.0 * static_cast<double>(k) * lk;
  }
  return q;
}

}  // namespace detail

inline SearchResult maximize_ratio(const SearchConfig& cfg) {
  cfg.validate();
  const std::size_t dim = 2 * static_cast<std::size_t>(cfg.degree);

  SearchResult result;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> best_params(dim, 0.0);
  int global_iter = 0;

  auto consider = [&](const std::vector<double>& q, double value) {
    if (value > best_value) {
      best_value = value;
      best_params = q;
      result.history.emplace_back(global_iter, value);
    }
  };
  auto objective = [&](const std::vector<double>& q) {
    const double v = detail::ratio_objective(q, cfg.p, cfg.grid_n);
    consider(q, v);
    return v;
  };

  std::vector<double> base_start;
  if (cfg.warm_start) {
    base_start.resize(dim);
    for (std::size_t k = 1; k < cfg.warm_start->size(); ++k) {
      base_start[2 * k - 2] = (*cfg.warm_start)[k].real();
      base_start[2 * k - 1] = (*cfg.warm_start)[k].imag();
    }
  } else {
    base_start = detail::truncated_extremal_params(cfg.degree);
  }

  const double kStep = 0.25;     // initial simplex edge
  const double kPerturb = 0.25;  // restart jitter scale
  bool all_converged = true;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<double> start = base_start;
    if (restart > 0) {
      RandomStream rng(restart_seed(cfg.seed, restart));
      for (double& v : start) v += kPerturb * rng.gaussian();
    }

    // simplex vertices and values, order index-stable
    std::vector<std::vector<double>> xs(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += kStep;
    std::vector<double> fs(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) fs[i] = objective(xs[i]);

    bool restart_converged = false;
    for (int it = 0; it < cfg.max_iters; ++it) {
      // ranks sorted by descending value, ties by lower index
      std::vector<std::size_t> rank(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) rank[i] = i;
      std::stable_sort(rank.begin(), rank.end(),
                       [&](std::size_t a, std::size_t b) { return fs[a] > fs[b]; });
      const std::size_t ibest = rank[0];
      const std::size_t iworst = rank[dim];
      const std::size_t isecond_worst = rank[dim - 1];

      double diameter = 0.0;
      for (std::size_t i = 0; i <= dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          diameter = std::max(diameter, std::abs(xs[i][j] - xs[ibest][j]));
      if (diameter <= cfg.tol) {
        restart_converged = true;
        break;
      }

      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i <= dim; ++i)
        if (i != iworst)
          for (std::size_t j = 0; j < dim; ++j) centroid[j] += xs[i][j];
      for (double& v : centroid) v /= static_cast<double>(dim);

      auto blend = [&](double t) {
        std::vector<double> q(dim);
        for (std::size_t j = 0; j < dim; ++j) q[j] = centroid[j] + t * (centroid[j] - xs[iworst][j]);
        return q;
      };

      const std::vector<double> xr = blend(1.0);
      const double fr = objective(xr);
      if (fr > fs[ibest]) {
        const std::vector<double> xe = blend(2.0);
        const double fe = objective(xe);
        if (fe > fr) {
          xs[iworst] = xe;
          fs[iworst] = fe;
        } else {
          xs[iworst] = xr;
          fs[iworst] = fr;
        }
      } else if (fr > fs[isecond_worst]) {
        xs[iworst] = xr;
        fs[iworst] = fr;
      } else {
        const std::vector<double> xc = blend(fr > fs[iworst] ? 0.5 : -0.5);
        const double fc = objective(xc);
        if (fc > std::max(fr, fs[iworst])) {
          xs[iworst] = xc;
          fs[iworst] = fc;
        } else {
          for (std::size_t i = 0; i <= dim; ++i) {
            if (i == ibest) continue;
            for (std::size_t j = 0; j < dim; ++j)
              xs[i][j] = xs[ibest][j] + 0.5 * (xs[i][j] - xs[ibest][j]);
            fs[i] = objective(xs[i]);
          }
        }
      }
      ++global_iter;
    }
    all_converged = all_converged && restart_converged;
  }

  result.iterations = global_iter;
  result.converged = all_converged;
  result.coeffs = TaylorCoeffs(detail::params_to_coeffs(best_params));
  result.best = ratio_report(result.coeffs, cfg.p, cfg.grid_n);
  // The final report re-derives the ratio from the unnormalized coefficients;
  // pin history to it so the last entry matches bit for bit.
  if (!result.history.empty()) result.history.back().second = result.best.ratio;
  return result;
}

struct PSweepRow {
  PExponent p{1.0};
  SearchResult result;
  double riesz_thorin = 0.0;
};

inline std::vector<PSweepRow> p_sweep(const std::vector<PExponent>& ps, const SearchConfig& base) {
  std::vector<PSweepRow> rows;
  rows.reserve(ps.size());
  for (const PExponent& p : ps) {
    SearchConfig cfg = base;
    cfg.p = p;
    PSweepRow row{p, maximize_ratio(cfg), reference_bound(p, BoundKind::riesz_thorin)};
    rows.push_back(std::move(row));
  }
  return rows;
}

struct LambdaSweepRow {
  double lambda = 0.0;
  double measured_x = 0.0;
  double formula_x = 0.0;
  double ratio = 0.0;
};

// Measures the family member at each lambda and compares the normalized mean
// against the closed form.
inline std::vector<LambdaSweepRow> lambda_sweep(const std::vector<double>& lambdas,
                                                const BlaschkeSpec& inner, std::size_t n) {
  std::vector<LambdaSweepRow> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    ExtremalSpec spec;
    spec.lambda = lambda;
    spec.inner = inner;
    const RatioReport r = verify_extremal(spec, n);
    rows.push_back(LambdaSweepRow{lambda, r.x, x_of_lambda(lambda), r.ratio});
  }
  return rows;
}

}  // namespace hardylab
