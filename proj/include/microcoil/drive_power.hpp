#pragma once

// Thermal current limit, Joule losses and magneto-electrical efficiency.

#include <string>
#include <string_view>
#include <vector>

#include "microcoil/geometry.hpp"
#include "microcoil/units.hpp"

namespace microcoil {

// Named packaging/substrate context with its admissible track current
// density.
struct SubstrateProfile {
  std::string name;
  CurrentDensity j_max;
};

// Kapton: 0.6 mA/um^2. Silicon on wafer: 6 mA/um^2. Silicon glued on a TO220
// support: 3.5 mA/um^2, calibrated so the reference coil carries 175 mA.
SubstrateProfile KaptonSubstrate();
SubstrateProfile SiliconOnWaferSubstrate();
SubstrateProfile SiliconTo220GluedSubstrate();
std::vector<SubstrateProfile> BuiltinSubstrates();

// Parses `{"name": ..., "j_max_A_per_m2": ...}` or an array of them. Throws
// ArgumentError on schema violations or non-positive j_max.
std::vector<SubstrateProfile> ParseSubstrates(std::string_view json_text);

// Looks `name` up in `profiles`; throws ArgumentError listing the known
// names when absent.
SubstrateProfile FindSubstrate(const std::vector<SubstrateProfile>& profiles,
                               std::string_view name);

struct MaterialProps {
  Resistivity resistivity = OhmMeters(1.7e-8);  // electroplated copper
};

// j_max * w * t.
Current MaxCurrent(const CoilGeometry& coil, const SubstrateProfile& substrate);

struct JouleLoss {
  Resistance resistance;  // rho * l / S
  Power power;            // rho * l * j_max^2 * S
};

JouleLoss JouleLossMax(const CoilGeometry& coil,
                       const SubstrateProfile& substrate,
                       const MaterialProps& material, LengthMethod method);

struct DriveReport {
  Current i_max;
  MagneticFieldH memf;  // center field at i_max
  Resistance resistance;
  Power p_jmax;
  double efficiency_ratio = 0.0;  // memf / p_jmax, A m^-1 W^-1
};

DriveReport MakeDriveReport(const CoilGeometry& coil,
                            const SubstrateProfile& substrate,
                            const MaterialProps& material,
                            LengthMethod method);

// Coil family with N free and w = s = (R_max - R_min) / (2N - 1), so every
// member spans the same [R_min, R_max] footprint.
struct TurnsFamily {
  CoilShape shape = CoilShape::kRound;
  Length outer_radius = Micrometers(500);
  Length inner_radius = Micrometers(100);
  Length thickness = Micrometers(10);
  Length fabrication_min_width = Micrometers(5);

  // Track width (= spacing) for `turns`.
  Length TrackWidth(int turns) const;
  CoilGeometry Member(int turns) const;
};

struct SweepRow {
  int turns = 0;
  Length track_width;
  MagneticFieldH h_center_per_ampere;
  DriveReport report;
  bool feasible = true;  // track width at or above the fabrication floor
  // Filled when the sweep is normalized; divided by the reference row.
  double memf_norm = 0.0;
  double p_norm = 0.0;
  double ratio_norm = 0.0;
};

struct SweepOptions {
  bool normalize = false;
  int reference_turns = 40;
};

// One row per entry of `turns`, in the given order. With normalize set,
// `turns` must contain options.reference_turns (ArgumentError otherwise).
std::vector<SweepRow> TurnsSweep(const TurnsFamily& family,
                                 const std::vector<int>& turns,
                                 const SubstrateProfile& substrate,
                                 const MaterialProps& material,
                                 LengthMethod method,
                                 const SweepOptions& options = {});

}  // namespace microcoil
