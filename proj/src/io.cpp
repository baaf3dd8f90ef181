#include "microcoil/io.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "microcoil/errors.hpp"

namespace microcoil {

std::string FormatNumber(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

double RoundToPrinted(double value) {
  const std::string text = FormatNumber(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

double ParseQuantity(std::string_view text, QuantityKind kind) {
  double number = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // from_chars rejects a leading '+', accept it for symmetry with '-'.
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, number);
  if (ec != std::errc() || !std::isfinite(number)) {
    throw ArgumentError("malformed quantity '" + std::string(text) + "'");
  }
  const std::string_view unit(ptr, static_cast<std::size_t>(last - ptr));
  if (unit.empty()) {
    throw ArgumentError("quantity '" + std::string(text) +
                        "' is missing a unit");
  }
  if (kind == QuantityKind::kLength) {
    double scale = 0.0;
    if (unit == "m") {
      scale = 1.0;
    } else if (unit == "mm") {
      scale = 1e-3;
    } else if (unit == "um" || unit == "\xC2\xB5m" || unit == "\xCE\xBCm") {
      scale = 1e-6;
    } else {
      throw ArgumentError("unknown length unit '" + std::string(unit) +
                          "' (use m, mm or um)");
    }
    if (number < 0.0) {
      throw ArgumentError("length '" + std::string(text) +
                          "' must not be negative");
    }
    return number * scale;
  }
  if (unit == "A") return number;
  if (unit == "mA") return number * 1e-3;
  throw ArgumentError("unknown current unit '" + std::string(unit) +
                      "' (use A or mA)");
}

Length ParseLength(std::string_view text) {
  return Meters(ParseQuantity(text, QuantityKind::kLength));
}

Current ParseCurrent(std::string_view text) {
  return Amperes(ParseQuantity(text, QuantityKind::kCurrent));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoilGeometry ParseCoil(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("coil file is not valid JSON: ") +
                        e.what());
  }
  if (!doc.is_object()) throw ArgumentError("coil file must hold an object");
  for (const char* key :
       {"shape", "turns", "outer_radius_um", "track_width_um",
        "track_spacing_um", "track_thickness_um"}) {
    if (!doc.contains(key)) {
      throw ArgumentError(std::string("coil file is missing key '") + key +
                          "'");
    }
  }
  const auto& shape_value = doc["shape"];
  if (!shape_value.is_string()) {
    throw ArgumentError("coil shape must be \"round\" or \"square\"");
  }
  const std::string shape_name = shape_value.get<std::string>();
  CoilShape shape;
  if (shape_name == "round") {
    shape = CoilShape::kRound;
  } else if (shape_name == "square") {
    shape = CoilShape::kSquare;
  } else {
    throw ArgumentError("coil shape must be \"round\" or \"square\", got '" +
                        shape_name + "'");
  }
  if (!doc["turns"].is_number_integer()) {
    throw ArgumentError("coil turns must be an integer");
  }
  auto um = [&](const char* key) {
    if (!doc[key].is_number()) {
      throw ArgumentError(std::string("coil '") + key + "' must be a number");
    }
    return Micrometers(doc[key].get<double>());
  };
  return CoilGeometry(shape, doc["turns"].get<int>(), um("outer_radius_um"),
                      um("track_width_um"), um("track_spacing_um"),
                      um("track_thickness_um"));
}

nlohmann::json CoilToJson(const CoilGeometry& coil) {
  return {
      {"shape", std::string(ShapeName(coil.shape()))},
      {"turns", coil.turns()},
      {"outer_radius_um", RoundToPrinted(InMicrometers(coil.outer_radius()))},
      {"track_width_um", RoundToPrinted(InMicrometers(coil.track_width()))},
      {"track_spacing_um",
       RoundToPrinted(InMicrometers(coil.track_spacing()))},
      {"track_thickness_um",
       RoundToPrinted(InMicrometers(coil.track_thickness()))},
  };
}

std::string ProfileToCsv(const FieldProfile& profile) {
  const bool norm = profile.normalized.has_value();
  std::string out = norm ? "d_m,x_m,H_A_per_m,H_norm\n" : "d_m,x_m,H_A_per_m\n";
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    const FieldSample& s = profile.samples[i];
    out += FormatNumber(s.axial_distance.si()) + ',' +
           FormatNumber(s.lateral_offset.si()) + ',' + FormatNumber(s.h.si());
    if (norm) out += ',' + FormatNumber((*profile.normalized)[i]);
    out += '\n';
  }
  return out;
}

nlohmann::json ProfileToJson(const FieldProfile& profile) {
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    const FieldSample& s = profile.samples[i];
    nlohmann::json row = {{"d_m", RoundToPrinted(s.axial_distance.si())},
                          {"x_m", RoundToPrinted(s.lateral_offset.si())},
                          {"H_A_per_m", RoundToPrinted(s.h.si())}};
    if (profile.normalized) {
      row["H_norm"] = RoundToPrinted((*profile.normalized)[i]);
    }
    samples.push_back(std::move(row));
  }
  return {{"model", profile.model},
          {"current_A", RoundToPrinted(profile.current.si())},
          {"coil", CoilToJson(profile.coil)},
          {"samples", std::move(samples)}};
}

std::string SweepToCsv(const std::vector<SweepRow>& rows, bool normalized) {
  std::string out = "N,memf_A_per_m,P_W,ratio_A_per_m_per_W";
  if (normalized) out += ",memf_norm,P_norm,ratio_norm";
  out += '\n';
  for (const SweepRow& r : rows) {
    out += std::to_string(r.turns) + ',' + FormatNumber(r.report.memf.si()) +
           ',' + FormatNumber(r.report.p_jmax.si()) + ',' +
           FormatNumber(r.report.efficiency_ratio);
    if (normalized) {
      out += ',' + FormatNumber(r.memf_norm) + ',' + FormatNumber(r.p_norm) +
             ',' + FormatNumber(r.ratio_norm);
    }
    out += '\n';
  }
  return out;
}

std::string ScenarioTableToCsv(const std::vector<ScenarioResult>& rows) {
  std::string out = "scenario,I_max_mA,bound,d_um,H_A_per_m\n";
  for (const ScenarioResult& r : rows) {
    out += ScenarioName(r.id) + ',' + FormatNumber(InMilliamperes(r.i_max)) +
           ',' + (r.upper_bound ? "upper_bound" : "exact") + ',' +
           FormatNumber(InMicrometers(r.separation)) + ',' +
           FormatNumber(r.h_max.si()) + '\n';
  }
  return out;
}

std::string ScenarioTableToText(const std::vector<ScenarioResult>& rows) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  auto cell = [&](const std::string& s, std::size_t width) {
    out << s << std::string(s.size() < width ? width - s.size() : 1, ' ');
  };
  cell("Configuration", 15);
  cell("I_max (mA)", 12);
  cell("Distance (um)", 15);
  out << "H_max (A/m)\n";
  for (const ScenarioResult& r : rows) {
    const std::string bound = r.upper_bound ? "< " : "";
    char h[32];
    std::snprintf(h, sizeof h, "%.0f", r.h_max.si());
    char i[32];
    std::snprintf(i, sizeof i, "%.0f", InMilliamperes(r.i_max));
    char d[32];
    std::snprintf(d, sizeof d, "%.0f", InMicrometers(r.separation));
    cell(ScenarioName(r.id), 15);
    cell(bound + i, 12);
    cell(d, 15);
    out << bound << h << '\n';
  }
  return out.str();
}

std::string SearchToCsv(const std::vector<DesignPoint>& ranked) {
  std::string out = "rank,N,w_um,s_um,t_um,I_max_mA,memf,P_W,ratio\n";
  int rank = 1;
  for (const DesignPoint& p : ranked) {
    out += std::to_string(rank++) + ',' + std::to_string(p.coil.turns()) +
           ',' + FormatNumber(InMicrometers(p.coil.track_width())) + ',' +
           FormatNumber(InMicrometers(p.coil.track_spacing())) + ',' +
           FormatNumber(InMicrometers(p.coil.track_thickness())) + ',' +
           FormatNumber(InMilliamperes(p.report.i_max)) + ',' +
           FormatNumber(p.report.memf.si()) + ',' +
           FormatNumber(p.report.p_jmax.si()) + ',' +
           FormatNumber(p.report.efficiency_ratio) + '\n';
  }
  return out;
}

}  // namespace microcoil
