#include "microcoil/drive_power.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"
#include "microcoil/analytic_field.hpp"
#include "microcoil/errors.hpp"

namespace microcoil {

SubstrateProfile KaptonSubstrate() {
  return {"kapton", MilliamperesPerSquareMicrometer(0.6)};
}

SubstrateProfile SiliconOnWaferSubstrate() {
  return {"silicon_on_wafer", MilliamperesPerSquareMicrometer(6.0)};
}

SubstrateProfile SiliconTo220GluedSubstrate() {
  return {"silicon_to220_glued", MilliamperesPerSquareMicrometer(3.5)};
}

std::vector<SubstrateProfile> BuiltinSubstrates() {
  return {KaptonSubstrate(), SiliconOnWaferSubstrate(),
          SiliconTo220GluedSubstrate()};
}

namespace {

SubstrateProfile SubstrateFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("j_max_A_per_m2")) {
    throw ArgumentError(
        "substrate entries need keys \"name\" and \"j_max_A_per_m2\"");
  }
  if (!j["name"].is_string() || !j["j_max_A_per_m2"].is_number()) {
    throw ArgumentError("substrate name must be a string and j_max a number");
  }
  const double j_max = j["j_max_A_per_m2"].get<double>();
  if (!(j_max > 0.0) || !std::isfinite(j_max)) {
    throw ArgumentError("substrate j_max must be positive and finite");
  }
  return {j["name"].get<std::string>(), AmperesPerSquareMeter(j_max)};
}

}  // namespace

std::vector<SubstrateProfile> ParseSubstrates(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("substrate file is not valid JSON: ") +
                        e.what());
  }
  std::vector<SubstrateProfile> out;
  if (doc.is_array()) {
    for (const auto& entry : doc) out.push_back(SubstrateFromJson(entry));
  } else {
    out.push_back(SubstrateFromJson(doc));
  }
  return out;
}

SubstrateProfile FindSubstrate(const std::vector<SubstrateProfile>& profiles,
                               std::string_view name) {
  // Later entries shadow earlier ones so user files can override built-ins.
  auto it = std::find_if(profiles.rbegin(), profiles.rend(),
                         [&](const auto& p) { return p.name == name; });
  if (it != profiles.rend()) return *it;
  std::string known;
  for (const auto& p : profiles) known += (known.empty() ? "" : ", ") + p.name;
  throw ArgumentError("unknown substrate '" + std::string(name) +
                      "' (known: " + known + ")");
}

Current MaxCurrent(const CoilGeometry& coil,
                   const SubstrateProfile& substrate) {
  return substrate.j_max * CrossSection(coil);
}

JouleLoss JouleLossMax(const CoilGeometry& coil,
                       const SubstrateProfile& substrate,
                       const MaterialProps& material, LengthMethod method) {
  const double rho = material.resistivity.si();
  const double length = MeanTrackLength(coil, method).si();
  const double area = CrossSection(coil).si();
  const double j = substrate.j_max.si();
  return {Resistance(rho * length / area),
          Power(rho * length * j * j * area)};
}

DriveReport MakeDriveReport(const CoilGeometry& coil,
                            const SubstrateProfile& substrate,
                            const MaterialProps& material,
                            LengthMethod method) {
  DriveReport report;
  report.i_max = MaxCurrent(coil, substrate);
  report.memf = CenterField(coil, report.i_max);
  const JouleLoss loss = JouleLossMax(coil, substrate, material, method);
  report.resistance = loss.resistance;
  report.p_jmax = loss.power;
  report.efficiency_ratio = report.memf.si() / report.p_jmax.si();
  return report;
}

Length TurnsFamily::TrackWidth(int turns) const {
  if (turns < 1) throw ArgumentError("turn count must be at least 1");
  return (outer_radius - inner_radius) / (2.0 * turns - 1.0);
}

CoilGeometry TurnsFamily::Member(int turns) const {
  const Length w = TrackWidth(turns);
  return CoilGeometry(shape, turns, outer_radius, w, w, thickness);
}

std::vector<SweepRow> TurnsSweep(const TurnsFamily& family,
                                 const std::vector<int>& turns,
                                 const SubstrateProfile& substrate,
                                 const MaterialProps& material,
                                 LengthMethod method,
                                 const SweepOptions& options) {
  if (turns.empty()) throw ArgumentError("turn sweep needs at least one N");
  std::vector<SweepRow> rows;
  rows.reserve(turns.size());
  for (int n : turns) {
    const CoilGeometry coil = family.Member(n);
    SweepRow row;
    row.turns = n;
    row.track_width = coil.track_width();
    row.h_center_per_ampere = CenterField(coil, Amperes(1.0));
    row.report = MakeDriveReport(coil, substrate, material, method);
    row.feasible = coil.track_width() >= family.fabrication_min_width;
    rows.push_back(row);
  }
  if (options.normalize) {
    auto ref = std::find_if(rows.begin(), rows.end(), [&](const SweepRow& r) {
      return r.turns == options.reference_turns;
    });
    if (ref == rows.end()) {
      throw ArgumentError("normalized sweep must include N = " +
                          std::to_string(options.reference_turns));
    }
    const DriveReport base = ref->report;
    for (SweepRow& row : rows) {
      row.memf_norm = row.report.memf / base.memf;
      row.p_norm = row.report.p_jmax / base.p_jmax;
      row.ratio_norm = row.report.efficiency_ratio / base.efficiency_ratio;
    }
  }
  return rows;
}

}  // namespace microcoil
