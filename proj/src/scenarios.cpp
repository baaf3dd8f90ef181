#include "microcoil/scenarios.hpp"

#include <cstdio>

#include "microcoil/analytic_field.hpp"

namespace microcoil {

std::string ScenarioName(ScenarioId id) {
  switch (id) {
    case ScenarioId::kS1:
      return "S1";
    case ScenarioId::kS2:
      return "S2";
    case ScenarioId::kK1:
      return "K1";
    case ScenarioId::kK2:
      return "K2";
    case ScenarioId::kK3:
      return "K3";
    case ScenarioId::kK4:
      return "K4";
  }
  return "?";
}

std::vector<Scenario> BuiltinScenarios() {
  const SubstrateProfile silicon = SiliconOnWaferSubstrate();
  const SubstrateProfile kapton = KaptonSubstrate();
  // Coil between silicon and Kapton: worse than coil-on-Kapton, so the 30 mA
  // Kapton limit only bounds the current from above.
  const SubstrateProfile sandwiched{"kapton_sandwiched", kapton.j_max};
  const Current silicon_drive = Milliamperes(300);
  const Current kapton_drive = Milliamperes(30);
  using enum ScenarioId;
  using enum CurrentLimitKind;
  return {
      {kS1, "coil and device on opposite faces of one wafer", silicon,
       kWaferThickness, silicon_drive, kExact},
      {kS2, "coil wafer stacked on device wafer", silicon,
       2.0 * kWaferThickness, silicon_drive, kExact},
      {kK1, "S2 stack glued on Kapton, coil sandwiched", sandwiched,
       2.0 * kWaferThickness, kapton_drive, kUpperBound},
      {kK2, "S1 die glued on Kapton, coil sandwiched", sandwiched,
       kWaferThickness, kapton_drive, kUpperBound},
      // Table value; equals wafer + film.
      {kK3, "coil processed on Kapton, device die on top", kapton,
       Micrometers(305), kapton_drive, kExact},
      {kK4, "coil and device co-processed on one Kapton film", kapton,
       kKaptonFilmThickness, kapton_drive, kExact},
  };
}

Scenario BuiltinScenario(ScenarioId id) {
  return BuiltinScenarios().at(static_cast<std::size_t>(id));
}

ScenarioResult EvaluateScenario(const CoilGeometry& coil,
                                const Scenario& scenario) {
  return {scenario.id, scenario.current, scenario.separation,
          OnAxisField(coil, scenario.current, scenario.separation),
          scenario.limit_kind == CurrentLimitKind::kUpperBound};
}

std::vector<ScenarioResult> ScenarioTable(const CoilGeometry& coil) {
  std::vector<ScenarioResult> rows;
  for (const Scenario& s : BuiltinScenarios()) {
    rows.push_back(EvaluateScenario(coil, s));
  }
  return rows;
}

std::string ScenarioCurrentNote(const CoilGeometry& coil) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "note: S1/S2 use a fixed 300 mA drive; the TO220-glued "
                "current limit of this coil is %.0f mA",
                InMilliamperes(MaxCurrent(coil, SiliconTo220GluedSubstrate())));
  return buf;
}

}  // namespace microcoil
