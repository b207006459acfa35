// Panel-decomposed adaptive Simpson quadrature. Shared by the parallel
// arc_length kernel and its serial reference so both see the exact same
// panel edges, budgets, and per-panel arithmetic; only the panel loop
// differs, and the final reduction is a serial index-order sum either way.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace liss::detail {

inline long double simpson_estimate(double a, double b, double fa, double fm,
                                    double fb) {
  return static_cast<long double>(b - a) / 6.0L *
         (static_cast<long double>(fa) + 4.0L * static_cast<long double>(fm) +
          static_cast<long double>(fb));
}

// Recursive bisection with Richardson correction (the usual S2 + (S2-S1)/15
// refinement). `budget` counts interval splits left; when it runs out the
// best estimate so far is kept and `converged` is cleared.
template <typename F>
long double adapt_simpson(const F& f, double a, double b, double fa, double fm,
                          double fb, long double whole, double rel_tol,
                          long double abs_tol, std::uint64_t& budget,
                          bool& converged) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  if (!(a < lm && lm < m && m < rm && rm < b)) {
    return whole;  // interval is at floating-point resolution
  }
  const double flm = f(lm);
  const double frm = f(rm);
  const long double left = simpson_estimate(a, m, fa, flm, fm);
  const long double right = simpson_estimate(m, b, fm, frm, fb);
  const long double s2 = left + right;
  const long double err = (s2 - whole) / 15.0L;
  const long double refined = s2 + err;
  const long double tol =
      abs_tol + static_cast<long double>(rel_tol) * fabsl(refined);
  if (fabsl(err) <= tol) return refined;
  if (budget < 2) {
    converged = false;
    return refined;
  }
  budget -= 2;
  const long double lv = adapt_simpson(f, a, m, fa, flm, fm, left, rel_tol,
                                       0.5L * abs_tol, budget, converged);
  const long double rv = adapt_simpson(f, m, b, fm, frm, fb, right, rel_tol,
                                       0.5L * abs_tol, budget, converged);
  return lv + rv;
}

struct PanelOutcome {
  long double value = 0.0L;
  bool converged = true;
};

template <typename F>
PanelOutcome integrate_panel(const F& f, double a, double b, double rel_tol,
                             double abs_tol, std::uint64_t budget) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const long double whole = simpson_estimate(a, b, fa, fm, fb);
  PanelOutcome out;
  std::uint64_t left = budget;
  out.value = adapt_simpson(f, a, b, fa, fm, fb, whole, rel_tol,
                            static_cast<long double>(abs_tol), left,
                            out.converged);
  return out;
}

struct PanelPlan {
  std::vector<double> edges;      // npanels + 1 ascending values, exact ends
  std::uint64_t panel_budget;     // splits available inside each panel
  double panel_abs_tol;           // abs_tol share of each panel
};

// At least 8 panels per period of the fastest oscillation, so an aliased
// coarse Simpson estimate cannot pass the tolerance test spuriously.
inline PanelPlan make_panel_plan(double t0, double t1, double max_freq,
                                 double abs_tol,
                                 std::uint64_t max_subdivisions) {
  const double span = t1 - t0;
  const double per_span =
      std::ceil(8.0 * max_freq * span / (2.0 * std::numbers::pi_v<double>));
  std::size_t n = 1;
  if (per_span > 1.0) n = static_cast<std::size_t>(per_span);
  PanelPlan plan;
  plan.edges.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    plan.edges[k] =
        t0 + span * (static_cast<double>(k) / static_cast<double>(n));
  }
  plan.edges[0] = t0;
  plan.edges[n] = t1;
  plan.panel_budget = max_subdivisions / n;
  if (plan.panel_budget == 0) plan.panel_budget = 1;
  plan.panel_abs_tol = abs_tol / static_cast<double>(n);
  return plan;
}

struct QuadratureOutcome {
  double value = 0.0;
  bool converged = true;
};

// Integrates f over the plan's panels. `parallel` toggles the OpenMP loop;
// results land in per-panel slots either way and are summed serially in
// index order, so the value is identical across thread counts and across
// the parallel/serial split.
template <typename F>
QuadratureOutcome integrate_panels(const F& f, const PanelPlan& plan,
                                   double rel_tol, bool parallel) {
  const std::int64_t n = static_cast<std::int64_t>(plan.edges.size()) - 1;
  std::vector<PanelOutcome> out(static_cast<std::size_t>(n));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      out[i] = integrate_panel(f, plan.edges[i], plan.edges[i + 1], rel_tol,
                               plan.panel_abs_tol, plan.panel_budget);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      out[i] = integrate_panel(f, plan.edges[i], plan.edges[i + 1], rel_tol,
                               plan.panel_abs_tol, plan.panel_budget);
    }
  }
  long double total = 0.0L;
  bool ok = true;
  for (std::int64_t i = 0; i < n; ++i) {
    total += out[i].value;
    ok = ok && out[i].converged;
  }
  return {static_cast<double>(total), ok};
}

}  // namespace liss::detail
