#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace cavcoll {

struct QuadResult {
  double value = 0;
  double abs_error = 0;  // estimated
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// 7-point Gauss / 15-point Kronrod pair on [a, b], QUADPACK error heuristic.
template <class F>
Panel gauss_kronrod15(const F& f, double a, double b) {
  static constexpr std::array<double, 8> xk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = wk[7] * fc;
  double gauss = wg[3] * fc;
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    kronrod += wk[j] * (f1[j] + f2[j]);
    if (j % 2 == 1) gauss += wg[j / 2] * (f1[j] + f2[j]);
  }

  const double mean = 0.5 * kronrod;
  double asc = wk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += wk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  asc *= std::abs(half);

  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration: the panel with the largest
/// error estimate is bisected until the summed estimate is below abs_tol.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                              int max_panels = 2000) {
  QuadResult res;
  if (a == b) return res;

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod15(f, a, b));
  double total = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > abs_tol && count < max_panels) {
    const auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::gauss_kronrod15(f, worst.a, mid);
    const auto right = detail::gauss_kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  std::vector<detail::Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  for (const auto& p : all) {
    total += p.value;
    error += p.error;
  }
  res.value = total;
  res.abs_error = error;
  res.evaluations = 15 * (2 * count - 1);
  res.converged = error <= abs_tol;
  return res;
}

}  // namespace cavcoll
