#include <algorithm>
#include <cmath>

#include "checks.hpp"
#include "engel/fields.hpp"
#include "engel/representation.hpp"

namespace engel::verify {

namespace {

ExactPoint random_exact(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  ExactPoint p;
  for (int i = 0; i < 4; ++i) {
    const long n = num(rng);
    p[i] = make_rational(n, den(rng));
  }
  return p;
}

GroupElement<Poly4> generic_point() {
  return {Poly4::variable(0), Poly4::variable(1), Poly4::variable(2), Poly4::variable(3)};
}

std::string coordinates_text(const std::array<Rational, 4>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + c[i].get_str();
  return s + ")";
}

Json coordinates_json(const std::array<Rational, 4>& c) {
  Json j = Json::array();
  for (const auto& q : c) j.push_back(q.get_str());
  return j;
}

}  // namespace

CheckReport check_group(const RunConfig& cfg) {
  CheckReport report{"verify-group", "group law", {}, {}};
  auto rng = check_rng(cfg, report.check);
  const long n = cfg.samples;
  const ExactPoint e = ExactPoint::identity();

  long assoc = 0, ident = 0, inv = 0, dil = 0, jl = 0, jr = 0;
  std::uniform_int_distribution<long> rnum(1, 9), rden(1, 5);
  for (long s = 0; s < n; ++s) {
    const ExactPoint x = random_exact(rng), y = random_exact(rng), z = random_exact(rng);
    if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) ++assoc;
    if (!(multiply(x, e) == x) || !(multiply(e, x) == x)) ++ident;
    if (!(multiply(x, inverse(x)) == e) || !(multiply(inverse(x), x) == e)) ++inv;
    const long rn = rnum(rng);
    const Rational r = make_rational(rn, rden(rng));
    if (!(dilate(r, multiply(x, y)) == multiply(dilate(r, x), dilate(r, y)))) ++dil;
    if (!(differentiated_left_jacobian(x) == jacobian_left_translation(x))) ++jl;
    if (!(differentiated_right_jacobian(x) == jacobian_right_translation(x))) ++jr;
  }
  exact_entry(report, "associativity", "group law", assoc, n);
  exact_entry(report, "identity element", "group law", ident, n);
  exact_entry(report, "inverse", "group law inverse", inv, n);
  exact_entry(report, "dilations are automorphisms", "homogeneous dilations", dil, n);

  const bool left_symbolic = symbolic_left_jacobian() == jacobian_left_translation(generic_point());
  const bool right_symbolic = symbolic_right_jacobian() == jacobian_right_translation(generic_point());
  exact_entry(report, "left translation Jacobian (symbolic)", "Jacobian of left translation", left_symbolic ? 0 : 1, 1);
  exact_entry(report, "right translation Jacobian (symbolic)", "Jacobian of right translation", right_symbolic ? 0 : 1,
              1);
  exact_entry(report, "left translation Jacobian (rational points)", "Jacobian of left translation", jl, n);
  exact_entry(report, "right translation Jacobian (rational points)", "Jacobian of right translation", jr, n);
  return report;
}

CheckReport check_fields(const RunConfig&) {
  CheckReport report{"verify-fields", "left-invariant vector fields", {}, {}};
  const auto left = left_invariant_generators();
  const auto right = right_invariant_generators();

  for (int i = 0; i < 4; ++i) {
    const auto li = verify_left_invariance(left[static_cast<std::size_t>(i)]);
    auto& a = exact_entry(report, "X" + std::to_string(i + 1) + " left-invariant", "left-invariant vector fields",
                          li.invariant ? 0 : 1, 1);
    a.values["field"] = left[static_cast<std::size_t>(i)].to_string();
    if (!li.invariant)
      for (const auto& r : li.residual) a.values["residual"].push_back(r.to_string());
    const auto ri = verify_right_invariance(right[static_cast<std::size_t>(i)]);
    auto& b = exact_entry(report, "X~" + std::to_string(i + 1) + " right-invariant", "right-invariant vector fields",
                          ri.invariant ? 0 : 1, 1);
    b.values["field"] = right[static_cast<std::size_t>(i)].to_string();
    if (!ri.invariant)
      for (const auto& r : ri.residual) b.values["residual"].push_back(r.to_string());
  }

  long commuting = 0;
  for (const auto& x : left)
    for (const auto& y : right)
      if (!commutator(x, y).is_zero()) ++commuting;
  exact_entry(report, "left- and right-invariant fields commute", "left and right invariant fields", commuting, 16);

  const GradationReport g = verify_gradation();
  Table brackets{"brackets", {"i", "j", "reversed_X1", "reversed_X2", "reversed_X3", "reversed_X4", "standard_X1",
                              "standard_X2", "standard_X3", "standard_X4"}, {}};
  long wrong = 0;
  for (const auto& b : g.brackets) {
    std::array<Rational, 4> expected{};
    if (b.i == 1 && b.j == 2) expected[2] = 1;
    if (b.i == 2 && b.j == 1) expected[2] = -1;
    if (b.i == 1 && b.j == 3) expected[3] = 1;
    if (b.i == 3 && b.j == 1) expected[3] = -1;
    if (b.reversed != expected) ++wrong;
    std::vector<std::string> row{std::to_string(b.i), std::to_string(b.j)};
    for (const auto& q : b.reversed) row.push_back(q.get_str());
    for (const auto& q : b.standard) row.push_back(q.get_str());
    brackets.rows.push_back(std::move(row));
    if (b.i < b.j && b.reversed != std::array<Rational, 4>{}) {
      Entry e;
      e.name = "[X" + std::to_string(b.i) + ",X" + std::to_string(b.j) + "]";
      e.reference = "bracket relations";
      e.values["reversed"] = coordinates_json(b.reversed);
      e.values["standard"] = coordinates_json(b.standard);
      e.status = b.reversed == expected ? Status::Pass : Status::Fail;
      e.note = "[X,Y] := YX - XY gives " + coordinates_text(b.reversed) + "; XY - YX gives " +
               coordinates_text(b.standard);
      report.add(std::move(e));
    }
  }
  auto& all = exact_entry(report, "bracket table", "bracket relations", wrong, static_cast<long>(g.brackets.size()));
  all.note = "expected [X1,X2] = X3, [X1,X3] = X4, all other brackets zero, with [X,Y] := YX - XY";
  report.tables.push_back(std::move(brackets));

  exact_entry(report, "gradation [V_i, V_j] in V_{i+j}", "stratification", g.graded ? 0 : 1, 1);
  exact_entry(report, "antisymmetry", "bracket relations", g.antisymmetric ? 0 : 1, 1);
  exact_entry(report, "Jacobi identity", "bracket relations", g.jacobi ? 0 : 1, 1);
  exact_entry(report, "Hormander condition", "stratification", g.hormander ? 0 : 1, 1);
  auto& lcs = exact_entry(report, "lower central series", "nilpotency step",
                          g.lower_central_dims == std::vector<int>{4, 2, 1, 0} && g.steps == 3 ? 0 : 1, 1);
  lcs.values["dimensions"] = g.lower_central_dims;
  lcs.values["steps"] = g.steps;
  if (!g.failures.empty()) {
    std::string text;
    for (const auto& f : g.failures) text += (text.empty() ? "" : "; ") + f;
    lcs.note = text;
  }
  return report;
}

namespace {

struct RepSample {
  RepParams p;
  Point x, y;
  Wavepacket h;
};

RepSample random_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.3, 3.0), mu(-2.0, 2.0), coord(-1.0, 1.0), width(0.3, 2.0),
      unit(-1.0, 1.0);
  std::bernoulli_distribution sign(0.5);
  const double l = sign(rng) ? mag(rng) : -mag(rng);
  const double m = mu(rng);
  Point x, y;
  for (int i = 0; i < 4; ++i) x[i] = coord(rng);
  for (int i = 0; i < 4; ++i) y[i] = coord(rng);
  const double ar = -width(rng);
  const double ai = unit(rng);
  const double br = unit(rng);
  const double bi = 2.0 * unit(rng);
  return {RepParams(l, m), x, y, Wavepacket(Complex(ar, ai), Complex(br, bi), 0.0)};
}

// Points spread over the bulk of a wavepacket.
std::vector<double> probe_points(const Wavepacket& h) {
  const double ar = -h.a().real();
  const double centre = h.b().real() / (2.0 * ar);
  const double w = 0.3 / std::sqrt(ar);
  std::vector<double> u;
  for (int k = -10; k <= 10; ++k) u.push_back(centre + k * w);
  return u;
}

template <typename F, typename G>
double relative_max_difference(const F& f, const G& g, const std::vector<double>& u) {
  double diff = 0.0, scale = 0.0;
  for (double t : u) {
    diff = std::max(diff, std::abs(f(t) - g(t)));
    scale = std::max(scale, std::abs(g(t)));
  }
  return diff / scale;
}

}  // namespace

CheckReport check_representation(const RunConfig& cfg) {
  CheckReport report{"rep-check", "Schrodinger-type representation", {}, {}};
  auto rng = check_rng(cfg, report.check);
  const double tol = cfg.tol(report.check);

  double hom = 0.0, unit = 0.0;
  Json hom_worst, unit_worst;
  for (int s = 0; s < cfg.samples; ++s) {
    const RepSample r = random_sample(rng);
    const Wavepacket lhs = pi_apply(r.p, multiply(r.x, r.y), r.h);
    const Wavepacket rhs = pi_apply(r.p, r.x, pi_apply(r.p, r.y, r.h));
    const double e = relative_max_difference(lhs, rhs, probe_points(rhs));
    if (e >= hom) {
      hom = e;
      hom_worst = {{"lambda", r.p.lambda}, {"mu", r.p.mu}, {"x", point_json(r.x)}, {"y", point_json(r.y)}};
    }
    const double u = std::abs(pi_apply(r.p, r.x, r.h).norm() - r.h.norm()) / r.h.norm();
    if (u >= unit) {
      unit = u;
      unit_worst = {{"lambda", r.p.lambda}, {"mu", r.p.mu}, {"x", point_json(r.x)}};
    }
  }
  auto& h = report.bound("homomorphism pi(x o y) = pi(x) pi(y)", "representation", hom, tol);
  h.values["samples"] = cfg.samples;
  h.values["worst"] = hom_worst;
  auto& u = report.bound("unitarity", "representation", unit, tol);
  u.values["samples"] = cfg.samples;
  u.values["worst"] = unit_worst;

  // Generators: exact action against central differences of pi(t e_i), and
  // against the quantized symbol on the grid.
  const Grid1D grid = cfg.grid();
  Table fd{"generators", {"generator", "lambda", "mu", "step", "residual", "ratio"}, {}};
  const double t = 0.02;
  for (int i = 1; i <= 4; ++i) {
    double worst_ratio_dev = 0.0, worst_ratio = 4.0, grid_err = 0.0;
    for (int s = 0; s < 3; ++s) {
      const RepSample r = random_sample(rng);
      const PolyWavepacket exact = pi_infinitesimal_apply(r.p, i, PolyWavepacket(r.h));
      const auto pts = probe_points(r.h);
      auto residual = [&](double step) {
        auto central = [&](double v) {
          return (pi_apply(r.p, axis_point(i - 1, step), r.h)(v) - pi_apply(r.p, axis_point(i - 1, -step), r.h)(v)) /
                 (2.0 * step);
        };
        return relative_max_difference(central, exact, pts);
      };
      const double r1 = residual(t), r2 = residual(0.5 * t);
      const double ratio = r1 / r2;
      if (std::abs(ratio - 4.0) >= worst_ratio_dev) {
        worst_ratio_dev = std::abs(ratio - 4.0);
        worst_ratio = ratio;
      }
      fd.rows.push_back({std::to_string(i), format_number(r.p.lambda), format_number(r.p.mu), format_number(t),
                         format_number(r1), format_number(ratio)});

      // Grid image on the central half of the grid, where the probe is resolved.
      const Wavepacket probe = Wavepacket::gaussian(1.0, 0.3 * s - 0.3, 0.5 * (s - 1));
      const ComplexVector applied = pi_infinitesimal(r.p, i, grid).op.apply(probe.sample(grid));
      const PolyWavepacket want = pi_infinitesimal_apply(r.p, i, PolyWavepacket(probe));
      double diff = 0.0, scale = 0.0;
      for (int k = 0; k < grid.size(); ++k) {
        if (std::abs(grid.point(k)) > 0.5 * grid.half_width()) continue;
        diff = std::max(diff, std::abs(applied(k) - want(grid.point(k))));
        scale = std::max(scale, std::abs(want(grid.point(k))));
      }
      grid_err = std::max(grid_err, diff / scale);
    }
    Entry e;
    e.name = "generator X" + std::to_string(i) + " finite-difference order";
    e.reference = "infinitesimal representation";
    e.tolerance = 0.8;  // ratio 4 +- 20%
    e.values["ratio"] = number(worst_ratio);
    e.status = std::abs(worst_ratio - 4.0) <= 0.8 ? Status::Pass : Status::Fail;
    report.add(std::move(e));
    auto& g = report.bound("generator X" + std::to_string(i) + " grid image", "infinitesimal representation",
                           grid_err, 1e-8);
    g.values["symbol"] = i == 1 ? "i xi" : i == 2 ? "i (lambda u^2/2 - mu/(2 lambda))" : i == 3 ? "-i lambda u"
                                                                                                  : "i lambda";
  }
  report.tables.push_back(std::move(fd));
  return report;
}

}  // namespace engel::verify
