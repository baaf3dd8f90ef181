#include "microcoil/design_search.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "json.hpp"
#include "microcoil/errors.hpp"

namespace microcoil {

void DesignConstraints::Validate() const {
  for (Length l : {min_track_width, min_spacing, max_thickness, outer_radius}) {
    if (!(l.si() > 0.0)) {
      throw ArgumentError("design constraints must be positive");
    }
  }
  if (min_turns < 1 || max_turns < min_turns) {
    throw ArgumentError("design constraints need 1 <= turns_min <= turns_max");
  }
}

DesignConstraints ParseConstraints(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("constraints file is not valid JSON: ") +
                        e.what());
  }
  if (!doc.is_object()) throw ArgumentError("constraints must be an object");
  DesignConstraints c;
  auto length = [&](const char* key, Length& out) {
    if (doc.contains(key)) out = Micrometers(doc.at(key).get<double>());
  };
  try {
    length("min_track_width_um", c.min_track_width);
    length("min_spacing_um", c.min_spacing);
    length("max_thickness_um", c.max_thickness);
    length("outer_radius_um", c.outer_radius);
    if (doc.contains("turns_min")) c.min_turns = doc.at("turns_min").get<int>();
    if (doc.contains("turns_max")) c.max_turns = doc.at("turns_max").get<int>();
  } catch (const nlohmann::json::type_error& e) {
    throw ArgumentError(std::string("bad constraints value: ") + e.what());
  }
  c.Validate();
  return c;
}

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kMaxMemf ? "memf" : "ratio";
}

namespace {

double ObjectiveValue(Objective objective, const DriveReport& report) {
  return objective == Objective::kMaxMemf ? report.memf.si()
                                          : report.efficiency_ratio;
}

auto TieKey(const CoilGeometry& c) {
  return std::make_tuple(c.turns(), c.track_width().si(),
                         c.track_spacing().si(), c.track_thickness().si());
}

void CheckGrid(const DesignConstraints& c, const DesignGrid& grid) {
  if (grid.turns.empty() || grid.thicknesses.empty() ||
      (!grid.tied_inner_radius &&
       (grid.widths.empty() || grid.spacings.empty()))) {
    throw ArgumentError("every design grid axis needs at least one value");
  }
  for (int n : grid.turns) {
    if (n < c.min_turns || n > c.max_turns) {
      throw ArgumentError("grid turn count " + std::to_string(n) +
                          " is outside the constraint range");
    }
  }
  for (Length t : grid.thicknesses) {
    if (!(t.si() > 0.0) || t > c.max_thickness) {
      throw ArgumentError("grid thickness exceeds the maximum thickness");
    }
  }
  if (grid.tied_inner_radius) {
    if (!(grid.tied_inner_radius->si() > 0.0) ||
        !(*grid.tied_inner_radius < c.outer_radius)) {
      throw ArgumentError("tied inner radius must lie in (0, R_max)");
    }
    return;
  }
  for (Length w : grid.widths) {
    if (w < c.min_track_width) {
      throw ArgumentError("grid track width is below the minimum width");
    }
  }
  for (Length s : grid.spacings) {
    if (s < c.min_spacing) {
      throw ArgumentError("grid spacing is below the minimum spacing");
    }
  }
}

}  // namespace

void RankDesigns(std::vector<DesignPoint>& points, double scale) {
  if (!(scale > 0.0)) throw ArgumentError("ranking scale must be positive");
  std::sort(points.begin(), points.end(),
            [scale](const DesignPoint& a, const DesignPoint& b) {
              const double va = a.objective * scale;
              const double vb = b.objective * scale;
              if (va != vb) return va > vb;
              return TieKey(a.coil) < TieKey(b.coil);
            });
}

SearchResult GridSearch(const DesignConstraints& constraints,
                        Objective objective,
                        const SubstrateProfile& substrate,
                        const MaterialProps& material, LengthMethod method,
                        const DesignGrid& grid) {
  constraints.Validate();
  CheckGrid(constraints, grid);

  SearchResult result;
  auto evaluate = [&](int n, Length w, Length s, Length t) {
    ++result.diagnostics.grid_points;
    std::optional<CoilGeometry> coil;
    try {
      coil.emplace(CoilShape::kRound, n, constraints.outer_radius, w, s, t);
    } catch (const DomainError&) {
      ++result.diagnostics.infeasible_geometry;
      return;
    }
    const DriveReport report =
        MakeDriveReport(*coil, substrate, material, method);
    result.ranked.push_back({*coil, report, ObjectiveValue(objective, report)});
    ++result.diagnostics.evaluated;
  };

  for (int n : grid.turns) {
    for (Length t : grid.thicknesses) {
      if (grid.tied_inner_radius) {
        const Length w =
            (constraints.outer_radius - *grid.tied_inner_radius) /
            (2.0 * n - 1.0);
        if (w < constraints.min_track_width || w < constraints.min_spacing) {
          ++result.diagnostics.grid_points;
          ++result.diagnostics.below_fabrication_floor;
          continue;
        }
        evaluate(n, w, w, t);
        continue;
      }
      for (Length w : grid.widths) {
        for (Length s : grid.spacings) evaluate(n, w, s, t);
      }
    }
  }

  if (result.ranked.empty()) {
    throw DomainError("design search found no feasible design (" +
                      std::to_string(result.diagnostics.grid_points) +
                      " grid points rejected)");
  }
  RankDesigns(result.ranked);
  return result;
}

}  // namespace microcoil
