#include "dynalg/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "dynalg/report.hpp"

namespace dynalg {

namespace {

struct Flags {
  RunConfig config;
  std::vector<std::string> params;
  std::string out_path;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--model", flags.config.model,
                  "Model to run: do, jc, or dirac2d")
      ->check(CLI::IsMember({"do", "jc", "dirac2d"}));
  cmd->add_option("--nmax", flags.config.n_max,
                  "Highest retained excitation number (>= 8)");
  cmd->add_option("--guard", flags.config.guard,
                  "Rows/columns excluded near the cutoff (1 <= guard < nmax)");
  cmd->add_option("--tol", flags.config.tolerance,
                  "Default residual tolerance");
  cmd->add_option("--param", flags.params,
                  "Model parameter KEY=VALUE (repeatable; sweep accepts "
                  "comma-separated value lists)");
  cmd->add_option("--out", flags.out_path,
                  "Write the report here instead of stdout");
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::pair<std::string, std::string> split_key_value(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("parameter '" + text +
                                "' is not of the form KEY=VALUE");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

double parse_number(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter " + key + ": bad number '" + text +
                                "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("parameter " + key + ": bad number '" + text +
                                "'");
  }
  return value;
}

std::vector<double> parse_value_list(const std::string& text,
                                     const std::string& key) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) {
      throw std::invalid_argument("parameter " + key +
                                  ": empty value in list");
    }
    values.push_back(parse_number(piece, key));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void apply_param(RunConfig& config, const std::string& key, double value) {
  if (config.model == "do") {
    if (key == "m") {
      config.m = value;
      return;
    }
    if (key == "omega") {
      config.omega = value;
      return;
    }
  } else if (config.model == "jc") {
    if (key == "omega") {
      config.omega = value;
      return;
    }
    if (key == "Omega") {
      config.Omega = value;
      return;
    }
    if (key == "J") {
      config.J = value;
      return;
    }
  } else if (config.model == "dirac2d") {
    if (key == "lmin" || key == "lmax") {
      if (value != std::floor(value)) {
        throw std::invalid_argument("parameter " + key +
                                    " must be an integer");
      }
      (key == "lmin" ? config.l_min : config.l_max) =
          static_cast<int>(value);
      return;
    }
  }
  throw std::invalid_argument("unknown parameter '" + key + "' for model " +
                              config.model);
}

int write_report(const VerificationReport& report, const Flags& flags,
                 std::ostream& out, std::ostream& err) {
  const std::string text = flags.format == "csv" ? report_to_csv(report)
                                                 : report_to_json(report);
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << flags.out_path << "' for writing\n";
      return 3;
    }
    file << text;
    file.flush();
    if (!file) {
      err << "error: failed while writing '" << flags.out_path << "'\n";
      return 3;
    }
  } else {
    out << text;
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Operator-algebra verification lab for dressed two-level "
               "boson models"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Compare analytic level formulas against dense "
                  "diagonalization");
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full identity/spectrum/matrix-element check suite");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run verify over a Cartesian grid of parameter values");
  add_common(spectrum, flags);
  add_common(verify, flags);
  add_common(sweep, flags);

  try {
    // CLI11's vector overload consumes arguments back-to-front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    VerificationReport report;
    if (app.got_subcommand(sweep)) {
      std::vector<std::pair<std::string, std::vector<double>>> lists;
      std::set<std::string> seen;
      for (const std::string& raw : flags.params) {
        auto [key, value_text] = split_key_value(raw);
        if (!seen.insert(key).second) {
          throw std::invalid_argument("duplicate parameter '" + key + "'");
        }
        lists.emplace_back(key, parse_value_list(value_text, key));
      }
      validate(flags.config);
      std::vector<RunConfig> grid{flags.config};
      for (const auto& [key, values] : lists) {
        std::vector<RunConfig> next;
        next.reserve(grid.size() * values.size());
        for (const RunConfig& cfg : grid) {
          for (double v : values) {
            RunConfig point = cfg;
            apply_param(point, key, v);
            next.push_back(point);
          }
        }
        grid = std::move(next);
      }
      report = run_sweep(flags.config, grid);
    } else {
      std::set<std::string> seen;
      for (const std::string& raw : flags.params) {
        auto [key, value_text] = split_key_value(raw);
        if (!seen.insert(key).second) {
          throw std::invalid_argument("duplicate parameter '" + key + "'");
        }
        if (value_text.find(',') != std::string::npos) {
          throw std::invalid_argument(
              "parameter " + key +
              ": value lists are only accepted by the sweep command");
        }
        apply_param(flags.config, key, parse_number(value_text, key));
      }
      report = app.got_subcommand(spectrum) ? run_spectrum(flags.config)
                                            : run_verify(flags.config);
    }
    return write_report(report, flags, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dynalg
