#pragma once

// File formats and text encodings. Numbers are written with 9 significant
// digits and a '.' decimal separator independent of the C locale.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "microcoil/analytic_field.hpp"
#include "microcoil/design_search.hpp"
#include "microcoil/drive_power.hpp"
#include "microcoil/geometry.hpp"
#include "microcoil/scenarios.hpp"

namespace microcoil {

// 9 significant digits, shortest general notation.
std::string FormatNumber(double value);

// FormatNumber(value) parsed back, so JSON and CSV carry identical digits.
double RoundToPrinted(double value);

enum class QuantityKind { kLength, kCurrent };

// "<number><unit>", unit in {m, mm, um, µm} for lengths and {A, mA} for
// currents. Returns the SI value. Throws ArgumentError on a missing or
// unknown unit, malformed number or negative length.
double ParseQuantity(std::string_view text, QuantityKind kind);
Length ParseLength(std::string_view text);
Current ParseCurrent(std::string_view text);

std::string ReadTextFile(const std::string& path);

// Keys: shape ("round"|"square"), turns, outer_radius_um, track_width_um,
// track_spacing_um, track_thickness_um. Schema problems throw ArgumentError,
// geometric infeasibility DomainError.
CoilGeometry ParseCoil(std::string_view json_text);
nlohmann::json CoilToJson(const CoilGeometry& coil);

// Header d_m,x_m,H_A_per_m (plus H_norm when the profile is normalized).
std::string ProfileToCsv(const FieldProfile& profile);
nlohmann::json ProfileToJson(const FieldProfile& profile);

// Header N,memf_A_per_m,P_W,ratio_A_per_m_per_W (plus *_norm columns).
std::string SweepToCsv(const std::vector<SweepRow>& rows, bool normalized);

// Header scenario,I_max_mA,bound,d_um,H_A_per_m.
std::string ScenarioTableToCsv(const std::vector<ScenarioResult>& rows);
std::string ScenarioTableToText(const std::vector<ScenarioResult>& rows);

// Header rank,N,w_um,s_um,t_um,I_max_mA,memf,P_W,ratio.
std::string SearchToCsv(const std::vector<DesignPoint>& ranked);

}  // namespace microcoil
