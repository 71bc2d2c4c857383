#include <algorithm>
#include <cmath>
#include <numbers>

#include "checks.hpp"
#include "engel/diffops.hpp"
#include "engel/plancherel.hpp"

namespace engel::verify {

namespace {

std::string params_text(const RepParams& p) {
  return "(" + format_number(p.lambda) + ", " + format_number(p.mu) + ")";
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

}  // namespace

CheckReport check_gft(const RunConfig& cfg) {
  CheckReport report{"gft-check", "group Fourier transform", {}, {}};
  const double tol = cfg.tol(report.check);
  const Grid1D grid = cfg.grid();
  const std::vector<RepParams> params{{1.0, 0.0}, {2.0, 3.0}, {-1.0, 1.0}};
  const auto functions = gaussian_test_functions();
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.2, 0.5);
  const ComplexVector hs = h.sample(grid);

  Table table{"routes", {"function", "lambda", "mu", "symbol_vs_direct", "kernel_vs_direct"}, {}};
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    const auto& f = functions[fi];
    for (const auto& p : params) {
      const ComplexVector via_symbol = gft_via_symbol(f, p, grid).apply(hs);
      const ComplexVector via_kernel = gft_via_kernel(f, p, grid).apply(hs);
      double ds = 0.0, dk = 0.0, scale = 0.0;
      for (int k = 0; k < grid.size(); ++k) {
        const double u = grid.point(k);
        if (std::abs(u) > 0.5 * grid.half_width()) continue;
        const Complex direct = gft_direct(f, p, h, u);
        ds = std::max(ds, std::abs(via_symbol(k) - direct));
        dk = std::max(dk, std::abs(via_kernel(k) - direct));
        scale = std::max(scale, std::abs(direct));
      }
      const std::string tag = "f" + std::to_string(fi + 1) + " at " + params_text(p);
      auto& e = report.bound("symbol form vs defining integral, " + tag, "group Fourier transform as KN operator",
                             ds / scale, tol);
      e.values["grid_n"] = grid.size();
      e.values["grid_l"] = grid.half_width();
      report.bound("kernel form vs defining integral, " + tag, "integral kernel of pi(f)", dk / scale, tol);
      table.rows.push_back({std::to_string(fi + 1), format_number(p.lambda), format_number(p.mu),
                            format_number(ds / scale), format_number(dk / scale)});
    }
  }
  report.tables.push_back(std::move(table));

  for (const auto& p : params) {
    const KernelCalibration c = calibrate_kernel(functions[1], p, h, {-1.0, -0.3, 0.4, 1.2});
    const double dev = std::abs(c.fitted_constant - c.reference_constant) / c.reference_constant;
    Entry e;
    e.name = "kernel sign and constant at " + params_text(p);
    e.reference = "integral kernel of pi(f)";
    e.tolerance = tol;
    e.values["sign"] = c.sign;
    e.values["fitted_constant"] = complex_json(c.fitted_constant);
    e.values["reference_constant"] = c.reference_constant;
    e.values["relative_deviation"] = number(dev);
    e.values["residual_plus"] = number(c.residual_plus);
    e.values["residual_minus"] = number(c.residual_minus);
    e.status = c.sign == 1 && dev <= tol ? Status::Pass : Status::Fail;
    e.note = "K(u, v) = C F3 f(sign (u - v), w(v)) fitted against the defining integral; reference C = (2 pi)^{3/2}";
    report.add(std::move(e));
  }

  const JacobianReport j = change_of_variables_jacobian();
  Entry e;
  e.name = "change of variables Jacobian";
  e.reference = "Plancherel change of variables";
  e.values["determinant"] = j.determinant.to_string({"u", "v", "lambda", "mu"});
  e.values["absolute_value"] = j.absolute_value.get_str();
  e.status = j.constant && j.absolute_value == make_rational(1, 2) ? Status::Pass : Status::Fail;
  report.add(std::move(e));
  return report;
}

CheckReport check_plancherel(const RunConfig& cfg) {
  CheckReport report{"plancherel", "Plancherel formula", {}, {}};
  const double tol = cfg.tol(report.check);
  const auto functions = gaussian_test_functions();

  Table panels{"panels", {"function", "lambda_lo", "lambda_hi", "core", "mu_tail", "cumulative"}, {}};
  std::vector<double> ratios;
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    const PlancherelResult r = plancherel_ratio(functions[fi], cfg.truncation);
    ratios.push_back(r.ratio);
    Entry e;
    e.name = "R(f" + std::to_string(fi + 1) + ")";
    e.reference = "Plancherel formula";
    e.values["ratio"] = number(r.ratio);
    e.values["norm_squared"] = number(r.norm_squared);
    e.values["core"] = number(r.core);
    e.values["mu_tail"] = number(r.mu_tail);
    e.values["gap"] = number(r.gap);
    e.values["lambda_tail"] = number(r.lambda_tail);
    e.values["error_estimate"] = number(r.error_estimate);
    e.values["converged"] = r.converged;
    e.values["evaluations"] = r.evaluations;
    e.status = r.converged ? Status::Pass : Status::Fail;
    if (!r.converged) e.note = "lambda quadrature did not reach its tolerance";
    report.add(std::move(e));

    auto& tails = report.add(Entry{"truncation tails f" + std::to_string(fi + 1), "Plancherel formula", Status::Pass,
                                   NAN, Json::object(), ""});
    tails.values["lambda_min"] = cfg.truncation.lambda_min;
    tails.values["lambda_max"] = cfg.truncation.lambda_max;
    tails.values["mu_max"] = cfg.truncation.mu_max;
    tails.values["relative_mu_tail"] = number(r.mu_tail / r.total);
    tails.values["relative_gap"] = number(r.gap / r.total);
    tails.values["relative_lambda_tail"] = number(r.lambda_tail / r.total);
    tails.note = "outside-core contributions, integrated rather than dropped";
    for (const auto& p : r.panels)
      panels.rows.push_back({std::to_string(fi + 1), format_number(p.lambda_lo), format_number(p.lambda_hi),
                             format_number(p.core), format_number(p.mu_tail), format_number(p.cumulative)});
  }
  report.tables.push_back(std::move(panels));

  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  auto& spread = report.bound("agreement across test functions", "Plancherel formula", (*hi - *lo) / mean, tol);
  spread.values["ratios"] = ratios;
  spread.values["mean"] = mean;

  auto& pred = report.bound("measured ratio vs change-of-variables prediction", "Plancherel change of variables",
                            std::abs(mean - predicted_plancherel_ratio()) / predicted_plancherel_ratio(), tol);
  pred.values["predicted"] = predicted_plancherel_ratio();
  pred.note = "predicted (2 pi)^3 / |det| = 16 pi^3";

  const ConstantVerdict v = adjudicate_plancherel_constant(mean);
  Entry e;
  e.name = "Plancherel constant";
  e.reference = "Plancherel constant";
  e.status = Status::Flag;
  e.values["measured"] = v.measured;
  e.values["stated_2^3pi^4"] = v.stated_value;
  e.values["derived_2^2pi^3"] = v.derived_value;
  e.values["predicted_16pi^3"] = v.predicted;
  e.values["stated_deviation"] = v.stated_deviation;
  e.values["derived_deviation"] = v.derived_deviation;
  e.values["predicted_deviation"] = v.predicted_deviation;
  e.note = v.status;
  report.add(std::move(e));
  return report;
}

CheckReport check_diffops(const RunConfig& cfg) {
  CheckReport report{"diffops", "difference operators", {}, {}};
  const double tol = cfg.tol(report.check);
  const Grid1D grid = cfg.grid();
  const auto kernels = gaussian_test_functions();
  const std::vector<RepParams> params{{1.0, 0.5}, {-1.5, 1.0}, {2.0, -0.7}};
  DeltaOptions opt;
  opt.mu_step = cfg.mu_step;
  opt.lambda_step = cfg.lambda_step;

  Table table{"formulas", {"kernel", "lambda", "mu", "delta", "path", "relative_error"}, {}};
  struct Worst {
    double value = 0.0;
    std::string where;
  };
  Worst w1, w2, w3, w4m, w4e;
  auto track = [&](Worst& w, double v, const std::string& where) {
    if (v >= w.value) w = {v, where};
  };
  for (std::size_t ki = 0; ki < kernels.size(); ++ki) {
    const auto& k = kernels[ki];
    for (const auto& p : params) {
      const std::string where = "kappa" + std::to_string(ki + 1) + " at " + params_text(p);
      auto row = [&](const char* delta, const char* path, double v) {
        table.rows.push_back({std::to_string(ki + 1), format_number(p.lambda), format_number(p.mu), delta, path,
                              format_number(v)});
      };
      const GridOperator d1 = delta_direct(1, k, p, grid);
      const GridOperator d2 = delta_direct(2, k, p, grid);
      const GridOperator d3 = delta_direct(3, k, p, grid);
      const GridOperator d4 = delta_direct(4, k, p, grid);
      const double e1 = relative_hs_difference(delta_x1_formula(k, p, grid, opt), d1);
      const double e2 = relative_hs_difference(delta_x2_formula(k, p, grid, opt), d2);
      const double e3 = relative_hs_difference(delta_x3_formula(k, p, grid, opt), d3);
      const double e4m = relative_hs_difference(delta_x4_formula(k, p, grid, opt, DeltaPath::Mixed), d4);
      const double e4e = relative_hs_difference(delta_x4_formula(k, p, grid, opt, DeltaPath::Exact), d4);
      row("x1", "formula", e1);
      row("x2", "extrapolated", e2);
      row("x3", "formula", e3);
      row("x4", "mixed", e4m);
      row("x4", "exact", e4e);
      track(w1, e1, where);
      track(w2, e2, where);
      track(w3, e3, where);
      track(w4m, e4m, where);
      track(w4e, e4e, where);
    }
  }
  auto add = [&](const std::string& name, const Worst& w, double t) {
    auto& e = report.bound(name, "difference operators", w.value, t);
    e.values["worst_at"] = w.where;
    e.values["cases"] = kernels.size() * params.size();
  };
  add("Delta_x1 formula vs direct", w1, tol);
  add("Delta_x2 formula (extrapolated) vs direct", w2, tol);
  add("Delta_x3 formula vs direct", w3, 100.0 * tol);
  add("Delta_x4 formula, mixed path, vs direct", w4m, 1000.0 * tol);
  add("Delta_x4 formula, exact path, vs direct", w4e, 10.0 * tol);
  report.tables.push_back(std::move(table));

  // Product rule: x_i X_j kappa = X_j (x_i kappa) - (X_j x_i) kappa on the Fourier side.
  const auto gens = left_invariant_generators();
  const auto& k = kernels[1];
  const RepParams p = params[0];
  double leibniz = 0.0;
  std::string leibniz_at;
  for (int i = 1; i <= 4; ++i) {
    const GridOperator xk = delta_direct(i, k, p, grid);
    for (int j = 1; j <= 4; ++j) {
      const auto& xj = gens[static_cast<std::size_t>(j - 1)];
      const GridOperator lhs = delta_direct(i, k.apply(xj), p, grid);
      GridOperator rhs = pi_infinitesimal(p, j, grid).op * xk;
      const Poly4 c = xj.apply(Poly4::variable(i - 1));
      if (!c.is_zero()) rhs -= group_fourier(k.times(c), p, grid);
      const double e = relative_hs_difference(rhs, lhs);
      if (e >= leibniz) {
        leibniz = e;
        leibniz_at = "x" + std::to_string(i) + " X" + std::to_string(j);
      }
    }
  }
  auto& lb = report.bound("Leibniz rule pi(x_i X_j kappa)", "difference operators", leibniz, 10.0 * tol);
  lb.values["worst_at"] = leibniz_at;

  const auto right = right_invariant_generators();
  double left_inv = 0.0, right_inv = 0.0;
  for (const auto& kappa : kernels) {
    const GridOperator pk = group_fourier(kappa, p, grid);
    for (int j = 1; j <= 4; ++j) {
      const GridOperator xj = pi_infinitesimal(p, j, grid).op;
      left_inv = std::max(left_inv, relative_hs_difference(
                                        xj * pk, group_fourier(kappa.apply(gens[static_cast<std::size_t>(j - 1)]), p, grid)));
      right_inv = std::max(right_inv, relative_hs_difference(
                                          pk * xj, group_fourier(kappa.apply(right[static_cast<std::size_t>(j - 1)]), p, grid)));
    }
  }
  report.bound("pi(X kappa) = pi(X) pi(kappa)", "left-invariant fields on the Fourier side", left_inv, tol);
  report.bound("pi(X~ kappa) = pi(kappa) pi(X)", "right-invariant fields on the Fourier side", right_inv, tol);
  return report;
}

CheckReport check_delta_table(const RunConfig& cfg) {
  CheckReport report{"delta-table", "difference operators applied to generators", {}, {}};
  DeltaTableOptions opt;
  opt.match_tolerance = cfg.tol(report.check);
  const auto cells = delta_table(opt);

  Table table{"cells", {"i", "j", "published", "leibniz", "numeric_re_at_samples", "numeric_vs_leibniz",
                        "numeric_vs_published", "status"}, {}};
  for (const auto& c : cells) {
    Entry e;
    e.name = "Delta_x" + std::to_string(c.i) + " pi(X" + std::to_string(c.j) + ")";
    e.reference = "table of Delta_x_i pi(X_j)";
    e.tolerance = opt.match_tolerance;
    Json published = Json::array();
    std::string published_text;
    for (std::size_t n = 0; n < c.published.size(); ++n) {
      published.push_back({{"claim", c.published[n].text}, {"numeric_deviation", number(c.numeric_vs_published[n])}});
      published_text += (n ? " | " : "") + c.published[n].text;
    }
    e.values["published"] = published;
    e.values["leibniz"] = c.leibniz;
    Json numeric = Json::array();
    std::string numeric_text;
    for (std::size_t s = 0; s < c.numeric_ratio.size(); ++s) {
      numeric.push_back({{"u", c.sample_points[s]}, {"value", complex_json(c.numeric_ratio[s])}});
      numeric_text += (s ? " " : "") + format_number(c.numeric_ratio[s].real());
    }
    e.values["numeric"] = numeric;
    e.values["numeric_vs_leibniz"] = number(c.numeric_vs_leibniz);
    e.values["extrapolation_change"] = number(c.extrapolation_change.empty() ? 0.0 : c.extrapolation_change.front());
    if (c.numeric_vs_leibniz > opt.match_tolerance) {
      e.status = Status::Fail;
      e.note = "numerical limit disagrees with the product rule";
    } else if (c.status == "agree") {
      e.status = Status::Pass;
    } else {
      e.status = Status::Flag;
      e.note = c.status + ": published " + (published_text.empty() ? "nothing" : published_text) +
               ", product rule " + format_number(c.leibniz) + " I, numerics agree with the product rule";
    }
    report.add(std::move(e));
    std::string deviations;
    for (std::size_t n = 0; n < c.numeric_vs_published.size(); ++n)
      deviations += (n ? " | " : "") + format_number(c.numeric_vs_published[n]);
    table.rows.push_back({std::to_string(c.i), std::to_string(c.j), published_text, format_number(c.leibniz),
                          numeric_text, format_number(c.numeric_vs_leibniz), deviations, c.status});
  }
  report.tables.push_back(std::move(table));
  return report;
}

}  // namespace engel::verify
