#include "microcoil/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "microcoil/analytic_field.hpp"
#include "microcoil/biot_savart.hpp"
#include "microcoil/design_search.hpp"
#include "microcoil/drive_power.hpp"
#include "microcoil/errors.hpp"
#include "microcoil/io.hpp"
#include "microcoil/oracle_check.hpp"
#include "microcoil/scenarios.hpp"

namespace microcoil {
namespace {

using nlohmann::json;

const std::vector<std::string>& SubcommandNames() {
  static const std::vector<std::string> names = {
      "center", "axis",           "lateral",  "sensor-avg",  "sweep-turns",
      "drive",  "scenario-table", "optimize", "oracle-check"};
  return names;
}

std::size_t EditDistance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string Closest(const std::string& word,
                    const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_dist = 4;  // suggestions further away than this are noise
  for (const auto& c : candidates) {
    const std::size_t d = EditDistance(word, c);
    if (d < best_dist) {
      best_dist = d;
      best = c;
    }
  }
  return best;
}

// Shared flags. Physical quantities stay as text until parsed with units.
struct CommonArgs {
  std::string format = "text";
  std::string coil_path;
  std::string current;
  std::string substrate = "silicon_to220_glued";
  std::string substrates_path;
  std::string length_method = "closed_form";
  int segments_per_turn = 256;
  int filaments = 1;
};

OutputFormat ToFormat(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return OutputFormat::kText;
}

LengthMethod ToLengthMethod(const std::string& name) {
  return name == "centerline" ? LengthMethod::kCenterlineSum
                              : LengthMethod::kClosedForm;
}

CoilGeometry LoadCoil(const std::string& path) {
  return ParseCoil(ReadTextFile(path));
}

SubstrateProfile LoadSubstrate(const CommonArgs& args) {
  std::vector<SubstrateProfile> profiles = BuiltinSubstrates();
  if (!args.substrates_path.empty()) {
    for (auto& p : ParseSubstrates(ReadTextFile(args.substrates_path))) {
      profiles.push_back(std::move(p));
    }
  }
  return FindSubstrate(profiles, args.substrate);
}

DiscretizationSpec ToSpec(const CommonArgs& args) {
  DiscretizationSpec spec{args.segments_per_turn, args.filaments};
  spec.Validate();
  return spec;
}

// "5:40:5", "5,10,40" or "40".
std::vector<int> ParseTurnList(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ArgumentError("malformed turn list '" + text + "'");
    }
    return v;
  };
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    std::vector<int> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) {
      parts.push_back(to_int(item));
    }
    if (parts.size() < 2 || parts.size() > 3) {
      throw ArgumentError("turn range must be FROM:TO[:STEP]");
    }
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step < 1 || parts[1] < parts[0]) {
      throw ArgumentError("turn range needs FROM <= TO and STEP >= 1");
    }
    for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(to_int(item));
  }
  if (out.empty()) throw ArgumentError("empty turn list");
  return out;
}

std::vector<Length> ParseLengthList(const std::string& text) {
  std::vector<Length> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(ParseLength(item));
  }
  if (out.empty()) throw ArgumentError("empty length list");
  return out;
}

void EmitProfile(const FieldProfile& profile, OutputFormat format,
                 std::ostream& out) {
  switch (format) {
    case OutputFormat::kCsv:
      out << ProfileToCsv(profile);
      return;
    case OutputFormat::kJson:
      out << ProfileToJson(profile).dump(2) << '\n';
      return;
    case OutputFormat::kText:
      break;
  }
  const bool norm = profile.normalized.has_value();
  out << "# model: " << profile.model << ", coil: "
      << ShapeName(profile.coil.shape()) << ' ' << profile.coil.turns()
      << " turns, I = " << FormatNumber(profile.current.si()) << " A\n";
  out << "d_um        x_um        H_A_per_m" << (norm ? "      H_norm" : "")
      << '\n';
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    const FieldSample& s = profile.samples[i];
    char line[160];
    std::snprintf(line, sizeof line, "%-11s %-11s %-14s",
                  FormatNumber(InMicrometers(s.axial_distance)).c_str(),
                  FormatNumber(InMicrometers(s.lateral_offset)).c_str(),
                  FormatNumber(s.h.si()).c_str());
    out << line;
    if (norm) out << ' ' << FormatNumber((*profile.normalized)[i]);
    out << '\n';
  }
}

void AddFormat(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

void AddCoil(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--coil", args.coil_path, "Coil description (JSON)")
      ->required();
}

void AddCurrent(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--current", args.current, "Drive current, e.g. 300mA")
      ->required();
}

void AddDiscretization(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--segments-per-turn", args.segments_per_turn,
                  "Polygon edges per round loop")
      ->capture_default_str();
  cmd->add_option("--filaments", args.filaments,
                  "Concentric filaments per track width")
      ->capture_default_str();
}

void AddSubstrate(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--substrate", args.substrate,
                  "Substrate profile name (kapton, silicon_on_wafer, "
                  "silicon_to220_glued, or one from --substrates)")
      ->capture_default_str();
  cmd->add_option("--substrates", args.substrates_path,
                  "JSON file with extra substrate profiles");
  cmd->add_option("--length-method", args.length_method,
                  "Mean track length: closed_form or centerline")
      ->check(CLI::IsMember({"closed_form", "centerline"}))
      ->capture_default_str();
}

json DriveReportJson(const DriveReport& r) {
  return {{"I_max_A", RoundToPrinted(r.i_max.si())},
          {"memf_A_per_m", RoundToPrinted(r.memf.si())},
          {"resistance_ohm", RoundToPrinted(r.resistance.si())},
          {"P_W", RoundToPrinted(r.p_jmax.si())},
          {"ratio_A_per_m_per_W", RoundToPrinted(r.efficiency_ratio)}};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  if (args.size() >= 2 && !args[1].empty() && args[1][0] != '-') {
    const auto& names = SubcommandNames();
    if (std::find(names.begin(), names.end(), args[1]) == names.end()) {
      err << "error: unknown subcommand '" << args[1] << "'";
      const std::string hint = Closest(args[1], names);
      if (!hint.empty()) err << "; did you mean '" << hint << "'?";
      err << "\nrun with --help for the list of subcommands\n";
      return kExitUsageError;
    }
  }

  CLI::App app{"Planar spiral microcoil field, drive and packaging toolkit",
               "microcoil"};
  app.require_subcommand(1);
  CommonArgs common;
  std::function<void(OutputFormat)> action;

  // center
  auto* center = app.add_subcommand("center", "Field at the coil center");
  AddCoil(center, common);
  AddCurrent(center, common);
  AddFormat(center, common);
  center->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const Current current = ParseCurrent(common.current);
      const double h = CenterField(coil, current).si();
      const std::string model = CenterFieldModel(coil.shape());
      if (format == OutputFormat::kCsv) {
        out << "shape,turns,I_A,H_center_A_per_m\n"
            << ShapeName(coil.shape()) << ',' << coil.turns() << ','
            << FormatNumber(current.si()) << ',' << FormatNumber(h) << '\n';
      } else if (format == OutputFormat::kJson) {
        out << json{{"coil", CoilToJson(coil)},
                    {"current_A", RoundToPrinted(current.si())},
                    {"model", model},
                    {"H_center_A_per_m", RoundToPrinted(h)}}
                   .dump(2)
            << '\n';
      } else {
        out << "H_center = " << FormatNumber(h) << " A/m (model: " << model
            << ")\n";
      }
    };
  });

  // axis
  std::string axis_from = "0m";
  std::string axis_to;
  int axis_samples = 101;
  std::string axis_model = "analytic";
  auto* axis = app.add_subcommand("axis", "On-axis field profile");
  AddCoil(axis, common);
  AddCurrent(axis, common);
  axis->add_option("--from", axis_from, "Start distance")
      ->capture_default_str();
  axis->add_option("--to", axis_to, "End distance")->required();
  axis->add_option("--samples", axis_samples, "Number of samples")
      ->capture_default_str();
  axis->add_option("--model", axis_model, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}))
      ->capture_default_str();
  AddDiscretization(axis, common);
  AddFormat(axis, common);
  axis->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const Current current = ParseCurrent(common.current);
      const Length from = ParseLength(axis_from);
      const Length to = ParseLength(axis_to);
      const FieldProfile profile =
          axis_model == "oracle"
              ? OracleAxisProfile(coil, current, from, to, axis_samples,
                                  ToSpec(common))
              : OnAxisProfile(coil, current, from, to, axis_samples);
      EmitProfile(profile, format, out);
    };
  });

  // lateral
  std::string lateral_distance;
  std::string lateral_half_width = "1mm";
  int lateral_samples = 41;
  auto* lateral = app.add_subcommand(
      "lateral", "Axial field vs lateral offset in a plane above the coil");
  AddCoil(lateral, common);
  AddCurrent(lateral, common);
  lateral->add_option("--distance", lateral_distance, "Plane height")
      ->required();
  lateral->add_option("--half-width", lateral_half_width,
                      "Offsets span [-half-width, +half-width]")
      ->capture_default_str();
  lateral->add_option("--samples", lateral_samples, "Number of offsets")
      ->capture_default_str();
  AddDiscretization(lateral, common);
  AddFormat(lateral, common);
  lateral->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const Length half = ParseLength(lateral_half_width);
      EmitProfile(LateralProfile(coil, ParseCurrent(common.current),
                                 ParseLength(lateral_distance), -half, half,
                                 lateral_samples, ToSpec(common)),
                  format, out);
    };
  });

  // sensor-avg
  std::string sensor_distance;
  std::string sensor_to;
  int sensor_points = 0;
  std::string sensor_window = "2mm";
  int sensor_window_samples = 64;
  bool sensor_centered = false;
  auto* sensor = app.add_subcommand(
      "sensor-avg", "Field averaged over an on-axis line sensor");
  AddCoil(sensor, common);
  AddCurrent(sensor, common);
  sensor->add_option("--distance", sensor_distance,
                     "Sensor start distance (or profile start with --to)")
      ->required();
  sensor->add_option("--to", sensor_to, "Profile end distance");
  sensor->add_option("--points", sensor_points,
                     "Number of distances in the profile (with --to)");
  sensor->add_option("--window", sensor_window, "Active sensor length")
      ->capture_default_str();
  sensor->add_option("--window-samples", sensor_window_samples,
                     "Samples along the window (>= 64)")
      ->capture_default_str();
  sensor->add_flag("--centered", sensor_centered,
                   "Center the window on the distance instead of starting "
                   "there");
  AddDiscretization(sensor, common);
  AddFormat(sensor, common);
  sensor->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const Current current = ParseCurrent(common.current);
      const SensorWindow window{ParseLength(sensor_window),
                                sensor_window_samples, sensor_centered};
      const DiscretizationSpec spec = ToSpec(common);
      const Length start = ParseLength(sensor_distance);
      FieldProfile profile{coil, current, "biot_savart_sensor_avg", {}, {}};
      if (sensor_to.empty()) {
        profile.samples.push_back(
            {start, Meters(0.0),
             SensorAveragedField(coil, current, start, window, spec)});
      } else {
        const Length end = ParseLength(sensor_to);
        if (sensor_points < 2 || !(end > start)) {
          throw ArgumentError("--to needs --points >= 2 and an end beyond "
                              "--distance");
        }
        for (int i = 0; i < sensor_points; ++i) {
          const Length d =
              i + 1 == sensor_points
                  ? end
                  : start + (end - start) * (double(i) / (sensor_points - 1));
          profile.samples.push_back(
              {d, Meters(0.0),
               SensorAveragedField(coil, current, d, window, spec)});
        }
      }
      EmitProfile(profile, format, out);
    };
  });

  // sweep-turns
  std::string sweep_turns = "5:40:5";
  std::string sweep_r_max = "500um";
  std::string sweep_r_min = "100um";
  std::string sweep_thickness = "10um";
  bool sweep_normalize = false;
  bool sweep_per_ampere = false;
  auto* sweep = app.add_subcommand(
      "sweep-turns",
      "M.E.M.F., Joule losses and their ratio over a fixed-footprint family");
  sweep->add_option("--turns", sweep_turns, "FROM:TO[:STEP] or a list")
      ->capture_default_str();
  sweep->add_option("--r-max", sweep_r_max, "Outer radius")
      ->capture_default_str();
  sweep->add_option("--r-min", sweep_r_min, "Inner radius")
      ->capture_default_str();
  sweep->add_option("--thickness", sweep_thickness, "Track thickness")
      ->capture_default_str();
  sweep->add_flag("--normalize", sweep_normalize,
                  "Add columns normalized to N = 40");
  sweep->add_flag("--per-ampere", sweep_per_ampere,
                  "Emit the center field at 1 A per N instead");
  AddSubstrate(sweep, common);
  AddFormat(sweep, common);
  sweep->callback([&] {
    action = [&](OutputFormat format) {
      TurnsFamily family;
      family.outer_radius = ParseLength(sweep_r_max);
      family.inner_radius = ParseLength(sweep_r_min);
      family.thickness = ParseLength(sweep_thickness);
      const auto rows =
          TurnsSweep(family, ParseTurnList(sweep_turns), LoadSubstrate(common),
                     MaterialProps{}, ToLengthMethod(common.length_method),
                     SweepOptions{sweep_normalize, 40});
      if (sweep_per_ampere) {
        if (format == OutputFormat::kJson) {
          json arr = json::array();
          for (const auto& r : rows) {
            arr.push_back(
                {{"N", r.turns},
                 {"H_center_per_A", RoundToPrinted(r.h_center_per_ampere.si())}});
          }
          out << arr.dump(2) << '\n';
        } else {
          out << "N,H_center_per_A\n";
          for (const auto& r : rows) {
            out << r.turns << ',' << FormatNumber(r.h_center_per_ampere.si())
                << '\n';
          }
        }
        return;
      }
      if (format == OutputFormat::kJson) {
        json arr = json::array();
        for (const auto& r : rows) {
          json row = DriveReportJson(r.report);
          row["N"] = r.turns;
          row["w_um"] = RoundToPrinted(InMicrometers(r.track_width));
          row["feasible"] = r.feasible;
          if (sweep_normalize) {
            row["memf_norm"] = RoundToPrinted(r.memf_norm);
            row["P_norm"] = RoundToPrinted(r.p_norm);
            row["ratio_norm"] = RoundToPrinted(r.ratio_norm);
          }
          arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
        return;
      }
      out << SweepToCsv(rows, sweep_normalize);
      for (const auto& r : rows) {
        if (!r.feasible) {
          err << "warning: N = " << r.turns << " needs w = "
              << FormatNumber(InMicrometers(r.track_width))
              << " um, below the 5 um fabrication floor\n";
        }
      }
    };
  });

  // drive
  auto* drive = app.add_subcommand(
      "drive", "Maximum current, M.E.M.F., Joule losses and efficiency");
  AddCoil(drive, common);
  AddSubstrate(drive, common);
  AddFormat(drive, common);
  drive->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const SubstrateProfile substrate = LoadSubstrate(common);
      const LengthMethod method = ToLengthMethod(common.length_method);
      const DriveReport r =
          MakeDriveReport(coil, substrate, MaterialProps{}, method);
      if (format == OutputFormat::kJson) {
        json doc = DriveReportJson(r);
        doc["substrate"] = substrate.name;
        doc["length_method"] = std::string(LengthMethodName(method));
        out << doc.dump(2) << '\n';
      } else if (format == OutputFormat::kCsv) {
        out << "substrate,length_method,I_max_mA,memf_A_per_m,R_ohm,P_W,"
               "ratio_A_per_m_per_W\n"
            << substrate.name << ',' << LengthMethodName(method) << ','
            << FormatNumber(InMilliamperes(r.i_max)) << ','
            << FormatNumber(r.memf.si()) << ','
            << FormatNumber(r.resistance.si()) << ','
            << FormatNumber(r.p_jmax.si()) << ','
            << FormatNumber(r.efficiency_ratio) << '\n';
      } else {
        out << "substrate         " << substrate.name << '\n'
            << "length method     " << LengthMethodName(method) << '\n'
            << "I_max             " << FormatNumber(InMilliamperes(r.i_max))
            << " mA\n"
            << "M.E.M.F.          " << FormatNumber(r.memf.si()) << " A/m\n"
            << "resistance        " << FormatNumber(r.resistance.si())
            << " ohm\n"
            << "P_Jmax            " << FormatNumber(r.p_jmax.si()) << " W\n"
            << "M.E.M.F./P_Jmax   " << FormatNumber(r.efficiency_ratio)
            << " A/m/W\n";
      }
    };
  });

  // scenario-table
  auto* table = app.add_subcommand(
      "scenario-table", "Field at the actuated device for S1, S2, K1-K4");
  AddCoil(table, common);
  AddFormat(table, common);
  table->callback([&] {
    action = [&](OutputFormat format) {
      const CoilGeometry coil = LoadCoil(common.coil_path);
      const auto rows = ScenarioTable(coil);
      if (format == OutputFormat::kCsv) {
        out << ScenarioTableToCsv(rows);
      } else if (format == OutputFormat::kJson) {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"scenario", ScenarioName(r.id)},
                         {"I_max_mA", RoundToPrinted(InMilliamperes(r.i_max))},
                         {"bound", r.upper_bound ? "upper_bound" : "exact"},
                         {"d_um", RoundToPrinted(InMicrometers(r.separation))},
                         {"H_A_per_m", RoundToPrinted(r.h_max.si())}});
        }
        out << json{{"rows", arr}, {"note", ScenarioCurrentNote(coil)}}.dump(2)
            << '\n';
      } else {
        out << ScenarioTableToText(rows);
      }
      err << ScenarioCurrentNote(coil) << '\n';
    };
  });

  // optimize
  std::string opt_objective = "memf";
  std::string opt_constraints_path;
  std::string opt_turns = "5:40:5";
  std::string opt_widths;
  std::string opt_spacings;
  std::string opt_thicknesses = "10um";
  std::string opt_tied_inner;
  int opt_top = 0;
  auto* optimize = app.add_subcommand(
      "optimize", "Exhaustive constrained grid search over coil designs");
  optimize->add_option("--objective", opt_objective, "memf or ratio")
      ->check(CLI::IsMember({"memf", "ratio"}))
      ->capture_default_str();
  optimize->add_option("--constraints", opt_constraints_path,
                       "Fabrication constraints (JSON)");
  optimize->add_option("--turns", opt_turns, "FROM:TO[:STEP] or a list")
      ->capture_default_str();
  optimize->add_option("--widths", opt_widths, "Track widths, e.g. 5um,10um");
  optimize->add_option("--spacings", opt_spacings, "Track spacings");
  optimize->add_option("--thicknesses", opt_thicknesses, "Track thicknesses")
      ->capture_default_str();
  optimize->add_option("--tied-inner-radius", opt_tied_inner,
                       "Derive w = s from N for this inner radius");
  optimize->add_option("--top", opt_top, "Print only the best K rows");
  AddSubstrate(optimize, common);
  AddFormat(optimize, common);
  optimize->callback([&] {
    action = [&](OutputFormat format) {
      const DesignConstraints constraints =
          opt_constraints_path.empty()
              ? DesignConstraints{}
              : ParseConstraints(ReadTextFile(opt_constraints_path));
      DesignGrid grid;
      grid.turns = ParseTurnList(opt_turns);
      grid.thicknesses = ParseLengthList(opt_thicknesses);
      if (!opt_tied_inner.empty()) {
        grid.tied_inner_radius = ParseLength(opt_tied_inner);
      } else {
        if (opt_widths.empty() || opt_spacings.empty()) {
          throw ArgumentError(
              "optimize needs --widths and --spacings, or --tied-inner-radius");
        }
        grid.widths = ParseLengthList(opt_widths);
        grid.spacings = ParseLengthList(opt_spacings);
      }
      const Objective objective = opt_objective == "ratio"
                                      ? Objective::kMaxEfficiencyRatio
                                      : Objective::kMaxMemf;
      SearchResult result =
          GridSearch(constraints, objective, LoadSubstrate(common),
                     MaterialProps{}, ToLengthMethod(common.length_method),
                     grid);
      if (opt_top > 0 &&
          result.ranked.size() > static_cast<std::size_t>(opt_top)) {
        result.ranked.resize(opt_top, result.ranked.front());
      }
      const SearchDiagnostics& diag = result.diagnostics;
      if (format == OutputFormat::kJson) {
        json arr = json::array();
        int rank = 1;
        for (const auto& p : result.ranked) {
          json row = DriveReportJson(p.report);
          row["rank"] = rank++;
          row["coil"] = CoilToJson(p.coil);
          arr.push_back(std::move(row));
        }
        out << json{{"objective", std::string(ObjectiveName(objective))},
                    {"ranked", arr},
                    {"diagnostics",
                     {{"grid_points", diag.grid_points},
                      {"evaluated", diag.evaluated},
                      {"infeasible_geometry", diag.infeasible_geometry},
                      {"below_fabrication_floor",
                       diag.below_fabrication_floor}}}}
                   .dump(2)
            << '\n';
      } else {
        out << SearchToCsv(result.ranked);
      }
      err << "grid points " << diag.grid_points << ", evaluated "
          << diag.evaluated << ", infeasible geometry "
          << diag.infeasible_geometry << ", below fabrication floor "
          << diag.below_fabrication_floor << '\n';
    };
  });

  // oracle-check
  OracleCheckOptions oracle_options;
  auto* oracle = app.add_subcommand(
      "oracle-check",
      "Compare closed-form fields with the Biot-Savart oracle");
  oracle->add_option("--annulus-filaments", oracle_options.annulus_filaments,
                     "Filaments across the test annulus")
      ->capture_default_str();
  AddFormat(oracle, common);
  bool oracle_failed = false;
  oracle->callback([&] {
    action = [&](OutputFormat format) {
      const auto checks = RunOracleChecks(oracle_options);
      if (format == OutputFormat::kCsv) {
        out << "check,measured,tolerance,pass\n";
      }
      json arr = json::array();
      for (const auto& c : checks) {
        oracle_failed = oracle_failed || !c.pass;
        if (format == OutputFormat::kCsv) {
          out << c.name << ',' << FormatNumber(c.measured) << ','
              << FormatNumber(c.tolerance) << ',' << (c.pass ? 1 : 0) << '\n';
        } else if (format == OutputFormat::kJson) {
          arr.push_back({{"check", c.name},
                         {"measured", RoundToPrinted(c.measured)},
                         {"tolerance", RoundToPrinted(c.tolerance)},
                         {"pass", c.pass}});
        } else {
          out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": "
              << FormatNumber(c.measured) << " (tolerance "
              << FormatNumber(c.tolerance) << ")\n";
        }
      }
      if (format == OutputFormat::kJson) out << arr.dump(2) << '\n';
      err << "kernel: " << simd::IsaName(simd::ActiveIsa()) << '\n';
    };
  });

  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    {
      for (const CLI::App* sub : app.get_subcommands()) {
        std::vector<std::string> flags;
        for (const CLI::Option* opt : sub->get_options()) {
          for (const auto& l : opt->get_lnames()) flags.push_back("--" + l);
        }
        for (const auto& token : args) {
          if (token.rfind("--", 0) != 0) continue;
          const std::string flag = token.substr(0, token.find('='));
          if (std::find(flags.begin(), flags.end(), flag) != flags.end()) {
            continue;
          }
          const std::string hint = Closest(flag, flags);
          if (!hint.empty()) {
            err << "did you mean '" << hint << "' instead of '" << flag
                << "'?\n";
          }
        }
      }
    }
    return kExitUsageError;
  }

  try {
    if (action) action(ToFormat(common.format));
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  return oracle_failed ? kExitDomainError : kExitOk;
}

}  // namespace microcoil
