#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "microcoil/drive_power.hpp"
#include "microcoil/geometry.hpp"
#include "microcoil/units.hpp"

namespace microcoil {

// Fabrication limits of the micromoulding process.
struct DesignConstraints {
  Length min_track_width = Micrometers(5);
  Length min_spacing = Micrometers(5);
  Length max_thickness = Micrometers(20);
  Length outer_radius = Micrometers(500);
  int min_turns = 1;
  int max_turns = 40;

  // Throws ArgumentError.
  void Validate() const;
};

// Reads {min_track_width_um, min_spacing_um, max_thickness_um,
// outer_radius_um, turns_min, turns_max}; missing keys keep defaults.
DesignConstraints ParseConstraints(std::string_view json_text);

enum class Objective { kMaxMemf, kMaxEfficiencyRatio };

std::string_view ObjectiveName(Objective objective);

// Candidate values per parameter. With `tied_inner_radius` set, w = s is
// derived per N from (R_max - R_min) / (2N - 1) and `widths`/`spacings` are
// ignored.
struct DesignGrid {
  std::vector<int> turns;
  std::vector<Length> widths;
  std::vector<Length> spacings;
  std::vector<Length> thicknesses;
  std::optional<Length> tied_inner_radius;
};

struct DesignPoint {
  CoilGeometry coil;
  DriveReport report;
  double objective = 0.0;
};

struct SearchDiagnostics {
  int grid_points = 0;
  int evaluated = 0;
  int infeasible_geometry = 0;  // derived innermost radius <= 0
  int below_fabrication_floor = 0;  // tied widths under the minimum
};

struct SearchResult {
  std::vector<DesignPoint> ranked;  // best first
  SearchDiagnostics diagnostics;
};

// Exhaustive evaluation of the grid. Explicit grid values outside the
// constraints throw ArgumentError; an empty feasible set throws DomainError.
SearchResult GridSearch(const DesignConstraints& constraints,
                        Objective objective,
                        const SubstrateProfile& substrate,
                        const MaterialProps& material, LengthMethod method,
                        const DesignGrid& grid);

// Sorts by objective * scale, descending, breaking ties by smaller N, w, s,
// then t. `scale` must be positive.
void RankDesigns(std::vector<DesignPoint>& points, double scale = 1.0);

}  // namespace microcoil
