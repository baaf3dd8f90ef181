#pragma once

// Coil / actuated-device packaging configurations: two silicon stacks (S1,
// S2) and four Kapton variants (K1-K4).

#include <string>
#include <vector>

#include "microcoil/drive_power.hpp"
#include "microcoil/geometry.hpp"
#include "microcoil/units.hpp"

namespace microcoil {

enum class ScenarioId { kS1, kS2, kK1, kK2, kK3, kK4 };

std::string ScenarioName(ScenarioId id);

enum class CurrentLimitKind { kExact, kUpperBound };

inline constexpr Length kWaferThickness = Micrometers(280);
inline constexpr Length kKaptonFilmThickness = Micrometers(25);

struct Scenario {
  ScenarioId id;
  std::string description;
  SubstrateProfile substrate;
  Length separation;
  Current current;
  CurrentLimitKind limit_kind;
};

// S1, S2, K1, K2, K3, K4.
std::vector<Scenario> BuiltinScenarios();
Scenario BuiltinScenario(ScenarioId id);

struct ScenarioResult {
  ScenarioId id;
  Current i_max;
  Length separation;
  MagneticFieldH h_max;
  bool upper_bound = false;
};

// Round on-axis field at the scenario separation and current.
ScenarioResult EvaluateScenario(const CoilGeometry& coil,
                                const Scenario& scenario);

std::vector<ScenarioResult> ScenarioTable(const CoilGeometry& coil);

// The silicon rows use a fixed 300 mA drive while the TO220-glued limit of
// the same coil is 175 mA; surfaced to users alongside the table.
std::string ScenarioCurrentNote(const CoilGeometry& coil);

}  // namespace microcoil
