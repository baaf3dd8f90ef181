// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "microcoil/analytic_field.hpp"
#include "microcoil/biot_savart.hpp"
#include "microcoil/design_search.hpp"
#include "microcoil/drive_power.hpp"
#include "microcoil/geometry.hpp"
#include "microcoil/oracle_check.hpp"
#include "microcoil/scenarios.hpp"

namespace microcoil {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void Check(bool ok, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    details.push_back(std::string(ok ? "ok   " : "MISS ") + buf);
    pass = pass && ok;
  }
  void Info(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    details.push_back(std::string("info ") + buf);
  }
};

bool Within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

std::vector<int> FamilyTurns() {
  std::vector<int> turns;
  for (int n = 5; n <= 40; ++n) turns.push_back(n);
  return turns;
}

Outcome ReferenceTriple() {
  Outcome o;
  const DriveReport r =
      MakeDriveReport(ReferenceCoil(), SiliconTo220GluedSubstrate(), {},
                      LengthMethod::kClosedForm);
  o.Check(Within(InMilliamperes(r.i_max), 175.0, 1e-12), "I_max = %.6g mA",
          InMilliamperes(r.i_max));
  o.Check(Within(r.memf.si(), 14000.0, 0.10), "memf = %.6g A/m (14000 +-10%%)",
          r.memf.si());
  o.Check(Within(r.p_jmax.si(), 0.76, 0.10), "P_Jmax = %.6g W (0.76 +-10%%)",
          r.p_jmax.si());
  o.Check(Within(r.efficiency_ratio, 18000.0, 0.10),
          "ratio = %.6g A/m/W (18000 +-10%%)", r.efficiency_ratio);
  return o;
}

Outcome TurnsFamilyAnchors() {
  Outcome o;
  const TurnsFamily family;
  const std::vector<int> turns = FamilyTurns();
  const SubstrateProfile sub = SiliconTo220GluedSubstrate();
  const auto rows = TurnsSweep(family, turns, sub, {},
                               LengthMethod::kClosedForm, {true, 40});
  const SweepRow& n5 = rows.front();
  o.Check(std::abs(n5.memf_norm - 0.92) <= 0.02,
          "memf(5)/memf(40) = %.4f (0.92 +-0.02)", n5.memf_norm);
  o.Check(std::abs(n5.ratio_norm - 1.05) <= 0.02,
          "ratio(5)/ratio(40) = %.4f (1.05 +-0.02)", n5.ratio_norm);
  bool memf_ok = true, p_ok = true, ratio_ok = true;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    memf_ok = memf_ok && rows[k].report.memf >= rows[k - 1].report.memf;
    p_ok = p_ok && rows[k].report.p_jmax > rows[k - 1].report.p_jmax;
    ratio_ok = ratio_ok && rows[k].report.efficiency_ratio <
                               rows[k - 1].report.efficiency_ratio;
  }
  o.Check(memf_ok, "%s", "memf non-decreasing over N = 5..40");
  o.Check(p_ok, "%s", "P_Jmax increasing over N = 5..40");
  o.Check(ratio_ok, "%s", "ratio decreasing over N = 5..40");
  const auto centerline = TurnsSweep(family, turns, sub, {},
                                     LengthMethod::kCenterlineSum, {true, 40});
  o.Info("centerline length: memf(5)/memf(40) = %.4f, P(5)/P(40) = %.4f, "
         "ratio(5)/ratio(40) = %.4f",
         centerline.front().memf_norm, centerline.front().p_norm,
         centerline.front().ratio_norm);
  return o;
}

Outcome ScenarioTableReproduction() {
  Outcome o;
  const auto rows = ScenarioTable(ReferenceCoil());
  const double h_ref[] = {6900, 2055, 205, 690, 610, 2320};
  const double i_ref[] = {300, 300, 30, 30, 30, 30};
  const double d_ref[] = {280, 560, 560, 280, 305, 25};
  if (rows.size() != 6) {
    o.Check(false, "expected 6 rows, got %zu", rows.size());
    return o;
  }
  for (std::size_t k = 0; k < 6; ++k) {
    const ScenarioResult& r = rows[k];
    const bool exact_columns =
        std::abs(InMilliamperes(r.i_max) - i_ref[k]) < 1e-9 &&
        std::abs(InMicrometers(r.separation) - d_ref[k]) < 1e-9;
    o.Check(exact_columns && Within(r.h_max.si(), h_ref[k], 0.15),
            "%s: I = %g mA, d = %g um, H %s %.5g A/m (%g +-15%%)",
            ScenarioName(r.id).c_str(), InMilliamperes(r.i_max),
            InMicrometers(r.separation), r.upper_bound ? "<" : "=",
            r.h_max.si(), h_ref[k]);
  }
  return o;
}

Outcome CenterFieldLinearity() {
  Outcome o;
  const TurnsFamily family;
  std::vector<double> x, y;
  for (int n : FamilyTurns()) {
    x.push_back(n);
    y.push_back(CenterField(family.Member(n), Amperes(1)).si());
  }
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fit = intercept + slope * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - sy / m) * (y[i] - sy / m);
  }
  const double r2 = 1.0 - ss_res / ss_tot;
  o.Check(r2 > 0.999, "R^2 = %.6f (> 0.999), slope %.5g A/m per turn", r2,
          slope);
  return o;
}

double RoundOverSquare(double d) {
  const CoilGeometry round = ReferenceCoil(CoilShape::kRound);
  const CoilGeometry square = ReferenceCoil(CoilShape::kSquare);
  return OnAxisField(round, Amperes(1), Meters(d)) /
         OnAxisField(square, Amperes(1), Meters(d));
}

Outcome RoundVersusSquare() {
  Outcome o;
  const CoilGeometry round1(CoilShape::kRound, 1, Micrometers(500),
                            Micrometers(5), Micrometers(0), Micrometers(10));
  const double single = OnAxisField(round1, Amperes(1), Meters(0)) /
                        OnAxisField(round1.WithShape(CoilShape::kSquare),
                                    Amperes(1), Meters(0));
  const double expected = kPi / (2.0 * std::sqrt(2.0));
  o.Check(Within(single, expected, 1e-9),
          "single-turn center ratio = %.12f (pi/(2 sqrt 2) = %.12f)", single,
          expected);
  double lo = 1e9, hi = 0;
  for (int k = 0; k <= 100; ++k) {
    const double r = RoundOverSquare(k * 1e-6);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  o.Check(lo >= 1.05 && hi <= 1.15,
          "40-turn on-axis ratio over d in [0, 100 um]: [%.4f, %.4f] "
          "(within [1.05, 1.15])",
          lo, hi);
  double a = 100e-6, b = 5e-3;
  const bool bracket = RoundOverSquare(a) > 1.0 && RoundOverSquare(b) < 1.0;
  if (bracket) {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (a + b);
      (RoundOverSquare(mid) > 1.0 ? a : b) = mid;
    }
  }
  o.Check(bracket, "crossover distance = %.1f um (square dominates beyond)",
          0.5 * (a + b) * 1e6);
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  for (const OracleCheck& c : RunOracleChecks({})) {
    o.Check(c.pass, "%s: %.3g (tolerance %.3g)", c.name.c_str(), c.measured,
            c.tolerance);
  }
  return o;
}

Outcome PropertySuite() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> turns(1, 40);
  std::uniform_real_distribution<double> um(1.0, 30.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_coil = [&](CoilShape shape) {
    const int n = turns(rng);
    const double w = um(rng), s = um(rng), t = um(rng);
    const double r_max = n * (w + s) + 1.0 + 500.0 * unit(rng);
    return CoilGeometry(shape, n, Micrometers(r_max), Micrometers(w),
                        Micrometers(s), Micrometers(t));
  };

  double sum_err = 0, lin_err = 0, scale_err = 0, dipole_err = 0,
         factor_err = 0;
  bool monotone = true;
  for (int trial = 0; trial < 100; ++trial) {
    const CoilShape shape = trial % 2 ? CoilShape::kSquare : CoilShape::kRound;
    const CoilGeometry round = random_coil(CoilShape::kRound);
    double per_turn = 0;
    for (const TurnAnnulus& a : TurnAnnuli(round)) {
      per_turn += CenterFieldPerTurn(a, Amperes(1)).si();
    }
    sum_err = std::max(sum_err, std::abs(CenterField(round, Amperes(1)).si() /
                                             per_turn -
                                         1.0));

    const CoilGeometry coil = random_coil(shape);
    const double r_max = coil.outer_radius().si();
    const double d = 3.0 * r_max * unit(rng);
    const double alpha = 0.01 + 10.0 * unit(rng);
    const double h = OnAxisField(coil, Amperes(1), Meters(d)).si();
    lin_err = std::max(
        lin_err,
        std::abs(OnAxisField(coil, Amperes(alpha), Meters(d)).si() /
                     (alpha * h) -
                 1.0));
    const double lambda = 0.1 + 10.0 * unit(rng);
    scale_err = std::max(
        scale_err, std::abs(OnAxisField(coil.Scaled(lambda), Amperes(1),
                                        Meters(lambda * d))
                                    .si() *
                                lambda / h -
                            1.0));
    double previous = 1e300;
    for (int k = 0; k <= 50; ++k) {
      const double hk =
          OnAxisField(coil, Amperes(1), Meters(k * 0.1 * r_max)).si();
      monotone = monotone && hk < previous;
      previous = hk;
    }
    double moment_area = 0;
    for (const TurnAnnulus& a : TurnAnnuli(coil)) {
      const double c = a.centerline_radius.si();
      moment_area += shape == CoilShape::kRound ? kPi * c * c : 4.0 * c * c;
    }
    const double far = 100.0 * r_max;
    const double dipole = moment_area / (2.0 * kPi * far * far * far);
    dipole_err = std::max(
        dipole_err,
        std::abs(OnAxisField(coil, Amperes(1), Meters(far)).si() / dipole -
                 1.0));

    const SubstrateProfile sub{"p", AmperesPerSquareMeter(1e8 + 1e10 * unit(rng))};
    const JouleLoss loss =
        JouleLossMax(round, sub, {}, LengthMethod::kCenterlineSum);
    const double i = MaxCurrent(round, sub).si();
    factor_err = std::max(
        factor_err, std::abs(loss.resistance.si() * i * i / loss.power.si() - 1.0));
  }
  o.Check(sum_err <= 1e-12, "closed-form center vs per-turn sum: %.2e (1e-12)",
          sum_err);
  o.Check(lin_err <= 1e-12, "linearity in current: %.2e", lin_err);
  o.Check(scale_err <= 1e-12, "length-scale inversion: %.2e", scale_err);
  o.Check(monotone, "%s", "on-axis field strictly decreasing in d");
  o.Check(dipole_err <= 0.01, "dipole far field at 100 R_max: %.2e (1e-2)",
          dipole_err);
  o.Check(factor_err <= 1e-12, "R I^2 vs rho l j^2 S: %.2e (1e-12)",
          factor_err);
  return o;
}

Outcome LateralProfiles() {
  Outcome o;
  const CoilGeometry coil = ReferenceCoil();
  const int samples = 41;
  const int mid = samples / 2;
  auto profile = [&](double d_mm) {
    return LateralProfile(coil, Milliamperes(300), Millimeters(d_mm),
                          Millimeters(-1), Millimeters(1), samples,
                          DiscretizationSpec{});
  };
  const FieldProfile p2 = profile(2.0);
  const FieldProfile p3 = profile(3.0);
  const auto& n2 = *p2.normalized;
  const auto& n3 = *p3.normalized;
  bool even = true, monotone = true, flatter = true;
  for (int k = 1; k <= mid; ++k) {
    for (const auto* n : {&n2, &n3}) {
      even = even && std::abs((*n)[mid + k] - (*n)[mid - k]) <= 1e-9;
      monotone = monotone && (*n)[mid + k] < (*n)[mid + k - 1] &&
                 (*n)[mid - k] < (*n)[mid - k + 1];
    }
    flatter = flatter && n3[mid + k] > n2[mid + k] && n3[mid - k] > n2[mid - k];
  }
  o.Check(even, "%s", "profiles even in x (1e-9)");
  o.Check(monotone, "%s", "peaked at x = 0 and monotone in |x|");
  o.Check(flatter, "%s", "3 mm profile flatter than 2 mm at every |x| > 0");
  const double at_half_mm = n2[mid + 10];
  o.Check(at_half_mm >= 0.75,
          "normalized H at |x| = 0.5 mm, d = 2 mm: %.4f (>= 0.75); published "
          "claim is a 10%% deviation (>= 0.90) for a sensor-averaged reading",
          at_half_mm);
  o.Info("point samples at 3 mm: %.4f at |x| = 0.5 mm", n3[mid + 10]);
  return o;
}

std::vector<CoilGeometry> Ranking(Objective objective, std::vector<int> turns) {
  DesignGrid grid;
  grid.turns = std::move(turns);
  grid.thicknesses = {Micrometers(10)};
  grid.tied_inner_radius = Micrometers(100);
  const SearchResult r =
      GridSearch({}, objective, SiliconTo220GluedSubstrate(), {},
                 LengthMethod::kClosedForm, grid);
  std::vector<CoilGeometry> coils;
  for (const DesignPoint& p : r.ranked) coils.push_back(p.coil);
  return coils;
}

Outcome DesignSearchSelection() {
  Outcome o;
  std::mt19937 rng(7);
  for (Objective objective :
       {Objective::kMaxMemf, Objective::kMaxEfficiencyRatio}) {
    const std::vector<CoilGeometry> base = Ranking(objective, FamilyTurns());
    const int expected = objective == Objective::kMaxMemf ? 40 : 5;
    o.Check(base.front().turns() == expected, "%s selects N = %d (expected %d)",
            std::string(ObjectiveName(objective)).c_str(),
            base.front().turns(), expected);
    bool stable = Ranking(objective, FamilyTurns()) == base;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> shuffled = FamilyTurns();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      stable = stable && Ranking(objective, shuffled) == base;
    }
    o.Check(stable, "%s ranking identical across runs and enumeration orders",
            std::string(ObjectiveName(objective)).c_str());
  }
  return o;
}

}  // namespace
}  // namespace microcoil

int main() {
  using microcoil::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "reference drive triple", microcoil::ReferenceTriple},
      {2, "turn-count family anchors", microcoil::TurnsFamilyAnchors},
      {3, "packaging table", microcoil::ScenarioTableReproduction},
      {4, "center field linear in N", microcoil::CenterFieldLinearity},
      {5, "round versus square", microcoil::RoundVersusSquare},
      {6, "oracle equivalence", microcoil::OracleEquivalence},
      {7, "property suite", microcoil::PropertySuite},
      {8, "lateral profiles", microcoil::LateralProfiles},
      {9, "design search", microcoil::DesignSearchSelection},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL",
                c.id, c.name, secs);
    for (const std::string& d : o.details) std::printf("      %s\n", d.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
