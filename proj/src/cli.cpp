#include "spinchain/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "spinchain/analysis.hpp"
#include "spinchain/error.hpp"
#include "spinchain/format.hpp"
#include "spinchain/io.hpp"
#include "spinchain/program.hpp"
#include "spinchain/scheduler.hpp"

namespace spinchain {

namespace {

using nlohmann::json;

// Everything a subcommand may read. Unset optionals fall back to the config
// file, then to defaults.
struct RunConfig {
  std::optional<std::string> config_file;
  std::optional<std::string> chain_file;
  std::optional<ChainSpec> chain_inline;
  std::optional<int> n;
  std::optional<double> j_hz;
  std::optional<std::string> builder;
  std::optional<std::string> seq_file;
  std::optional<std::string> backend;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<int> oracle_max_spins;
  std::optional<std::string> component;
  std::optional<int> n_max;
  std::optional<std::string> start;
  std::optional<int> source;
  std::optional<int> target;
  bool check = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
void fill(std::optional<T>& field, const json& j, const char* key) {
  if (!field && j.contains(key)) field = j.at(key).get<T>();
}

void merge_config(RunConfig& cfg) {
  if (!cfg.config_file) return;
  json j;
  try {
    j = json::parse(read_file(*cfg.config_file));
    if (!j.is_object()) throw ArgumentError("config must be a JSON object");
    // The chain source is one unit: flags replace it entirely.
    if (!cfg.chain_file && !cfg.n && !cfg.j_hz) {
      if (j.contains("chain")) {
        if (j["chain"].is_string()) {
          cfg.chain_file = j["chain"].get<std::string>();
        } else {
          cfg.chain_inline = chain_from_json(j["chain"]);
        }
      }
      fill(cfg.n, j, "n");
      fill(cfg.j_hz, j, "J");
    }
    if (!cfg.builder && !cfg.seq_file) {
      fill(cfg.builder, j, "builder");
      fill(cfg.seq_file, j, "seq");
    }
    fill(cfg.backend, j, "backend");
    fill(cfg.tol, j, "tol");
    fill(cfg.format, j, "format");
    fill(cfg.oracle_max_spins, j, "oracle_max_spins");
    fill(cfg.component, j, "component");
    fill(cfg.n_max, j, "n_max");
    fill(cfg.start, j, "start");
    if (!cfg.check && j.contains("check")) cfg.check = j["check"].get<bool>();
  } catch (const json::exception& e) {
    throw ArgumentError("config '" + *cfg.config_file + "': " + e.what());
  }
}

// Flag, then environment, then config file, then the built-in default.
int oracle_cap(const RunConfig& cfg, std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPINCHAIN_ORACLE_MAX")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ArgumentError("SPINCHAIN_ORACLE_MAX must be an integer");
    }
  }
  if (cfg.oracle_max_spins) return *cfg.oracle_max_spins;
  return kDefaultOracleMaxSpins;
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.value_or(fallback);
  for (const char* a : allowed)
    if (f == a) return f;
  throw ArgumentError("format '" + f + "' not available for this command");
}

double tolerance(const RunConfig& cfg) {
  const double tol = cfg.tol.value_or(kTransferTolerance);
  if (!(tol > 0.0)) throw ArgumentError("--tol must be positive");
  return tol;
}

Backend parse_backend(const RunConfig& cfg) {
  const std::string b = cfg.backend.value_or("heisenberg");
  if (b == "heisenberg") return Backend::Heisenberg;
  if (b == "dense") return Backend::Dense;
  if (b == "both") return Backend::Both;
  throw ArgumentError("unknown backend '" + b + "'");
}

ChainSpec resolve_chain(const RunConfig& cfg) {
  const bool from_file = cfg.chain_file || cfg.chain_inline;
  if (from_file && (cfg.n || cfg.j_hz)) {
    throw ArgumentError("give either --chain or --n/--J, not both");
  }
  if (cfg.chain_file) return load_chain(*cfg.chain_file);
  if (cfg.chain_inline) return *cfg.chain_inline;
  if (!cfg.n) throw ArgumentError("a chain is required: --chain <file> or --n <int> [--J <hz>]");
  return ChainSpec::uniform(*cfg.n, cfg.j_hz.value_or(1.0));
}

NamedSequence resolve_sequence(const RunConfig& cfg, const ChainSpec& chain) {
  if (cfg.builder && cfg.seq_file) throw ArgumentError("give either --builder or --seq, not both");
  if (cfg.seq_file) {
    NamedSequence named;
    named.n = chain.n();
    try {
      named.sequence = parse_sequence(read_file(*cfg.seq_file), chain.n());
    } catch (const ParseError& e) {
      throw ArgumentError(*cfg.seq_file + ": " + e.what());
    }
    named.sequence->name = *cfg.seq_file;
    Rational total = 0;
    for (const auto& e : named.sequence->events) total += Rational(event_duration(e));
    named.nominal = Surd3(total);
    return named;
  }
  if (!cfg.builder) throw ArgumentError("a sequence is required: --builder <name> or --seq <file>");
  const std::string& b = *cfg.builder;
  const int n = chain.n();
  if (b == "swap13") {
    throw ArgumentError("'swap13' is a timing model only; use the 'table' command");
  }
  if (b == "soliton") {
    if (chain.is_uniform()) return build_soliton(n, chain.coupling(1));
    return build_soliton_unequal(chain).named;
  }
  if (b != "isotropic" && b != "inept") throw ArgumentError("unknown builder '" + b + "'");
  if (!chain.is_uniform()) throw ArgumentError("builder '" + b + "' needs equal couplings");
  return b == "isotropic" ? build_isotropic_chain(n, chain.coupling(1))
                          : build_inept(n, chain.coupling(1));
}

std::vector<Axis> components(const RunConfig& cfg) {
  const std::string c = cfg.component.value_or("all");
  if (c == "all") return {Axis::X, Axis::Y, Axis::Z};
  if (auto a = parse_axis(c)) return {*a};
  throw ArgumentError("unknown component '" + c + "'");
}

std::string sequence_label(const RunConfig& cfg) {
  return cfg.seq_file ? *cfg.seq_file : cfg.builder.value_or("");
}

// verify ---------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::optional<int> cap_flag, std::ostream& out) {
  const auto chain = resolve_chain(cfg);
  const auto format = pick_format(cfg, "text", {"text", "json", "csv"});
  const double tol = tolerance(cfg);
  const auto checked = components(cfg);
  const auto named = resolve_sequence(cfg, chain);
  const TransferOptions options{parse_backend(cfg), oracle_cap(cfg, cap_flag)};
  const int source = cfg.source.value_or(1);
  const int target = cfg.target.value_or(chain.n());
  const auto r = transfer_report(named, chain, source, target, options);

  bool passed = true;
  for (Axis a : checked) passed = passed && r.component_success(a, tol);
  if (r.backend_residual && *r.backend_residual > tol) passed = false;

  if (format == "json") {
    json j = to_json(r);
    j["sequence"] = sequence_label(cfg);
    j["chain"] = to_json(chain);
    j["tolerance"] = tol;
    json comps = json::array();
    for (Axis a : checked) comps.push_back(std::string(1, axis_char(a)));
    j["checked_components"] = comps;
    j["passed"] = passed;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "component,re,im,abs,checked,ok\n";
    for (int i = 0; i < 3; ++i) {
      const Axis a = kAxes[i];
      const auto z = r.component_overlaps[static_cast<std::size_t>(i)];
      const bool on = std::find(checked.begin(), checked.end(), a) != checked.end();
      out << axis_char(a) << "," << format_number(z.real()) << "," << format_number(z.imag()) << ","
          << format_number(std::abs(z)) << "," << (on ? 1 : 0) << ","
          << (r.component_success(a, tol) ? 1 : 0) << "\n";
    }
  } else {
    out << "sequence " << sequence_label(cfg) << " n=" << chain.n() << "\n";
    out << "transfer I" << source << " -> I" << target << "\n";
    out << "duration_s " << format_number(r.duration) << "\n";
    for (int i = 0; i < 3; ++i) {
      const Axis a = kAxes[i];
      const bool on = std::find(checked.begin(), checked.end(), a) != checked.end();
      out << axis_char(a) << " " << format_complex(r.component_overlaps[static_cast<std::size_t>(i)])
          << " " << (r.component_success(a, tol) ? "ok" : "fail") << (on ? "" : " (not checked)")
          << "\n";
    }
    if (r.backend_residual) out << "backend_residual " << format_number(*r.backend_residual) << "\n";
    for (const auto& fix : r.sign_corrections) out << "sign_correction " << format_event(fix) << "\n";
    out << "result " << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kExitOk : kExitFailure;
}

// table ----------------------------------------------------------------------

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto format = pick_format(cfg, "csv", {"csv", "json", "text"});
  if (cfg.chain_file || cfg.chain_inline) throw ArgumentError("table takes --J, not --chain");
  const double j = cfg.j_hz.value_or(1.0);
  if (!(j > 0.0) || !std::isfinite(j)) throw ArgumentError("--J must be positive");
  const auto rows = timing_table(cfg.n_max.value_or(10));
  if (format == "csv") {
    out << timing_csv(rows, j);
  } else if (format == "json") {
    out << to_json(rows, j).dump(2) << "\n";
  } else {
    // Fixed-width rendering of the same CSV cells.
    std::istringstream csv(timing_csv(rows, j));
    std::string line;
    while (std::getline(csv, line)) {
      std::istringstream cells(line);
      std::string cell, row;
      while (std::getline(cells, cell, ',')) {
        row += cell + std::string(cell.size() < 15 ? 16 - cell.size() : 1, ' ');
      }
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out << row << "\n";
    }
  }
  return kExitOk;
}

// schedule -------------------------------------------------------------------

int cmd_schedule(const RunConfig& cfg, std::optional<int> cap_flag, std::ostream& out) {
  const auto chain = resolve_chain(cfg);
  const auto format = pick_format(cfg, "json", {"json", "text"});
  const double tol = tolerance(cfg);
  const auto built = build_soliton_unequal(chain);

  bool passed = true;
  json check;
  if (cfg.check) {
    const int cap = oracle_cap(cfg, cap_flag);
    const double residual = scheduled_vs_ideal_residual(built, chain, cap);
    const auto r = transfer_report(built.named, chain, 1, chain.n(), {Backend::Both, cap});
    passed = residual <= tol && r.success(tol) && *r.backend_residual <= tol;
    check = {{"ideal_residual", std::stod(format_number(residual))},
             {"backend_residual", std::stod(format_number(*r.backend_residual))},
             {"transfer", to_json(r)},
             {"tolerance", tol},
             {"passed", passed}};
  }

  if (format == "json") {
    json j = schedule_to_json(built, chain);
    if (cfg.check) j["check"] = check;
    out << j.dump(2) << "\n";
  } else {
    const auto& t = built.times;
    out << "encode_s " << format_number(to_double(t.encode)) << "\n";
    out << "propagate_s " << format_number(to_double(t.propagate)) << "\n";
    out << "decode_s " << format_number(to_double(t.decode)) << "\n";
    out << "total_s " << format_number(to_double(t.total)) << "\n";
    Rational offset = 0;
    for (std::size_t s = 0; s < built.schedules.size(); ++s) {
      const auto& sched = built.schedules[s];
      out << "step " << built.budgets[s].step << " " << built.budgets[s].label << " start "
          << format_number(to_double(offset)) << " interval "
          << format_number(to_double(sched.interval)) << " flips " << sched.flips.size() << "\n";
      for (const auto& f : sched.flips) {
        out << "  flip spin " << f.spin << " at " << format_number(to_double(offset + f.time)) << "\n";
      }
      offset += sched.interval;
    }
    if (cfg.check) {
      out << "ideal_residual " << format_number(check["ideal_residual"].get<double>()) << "\n";
      out << "backend_residual " << format_number(check["backend_residual"].get<double>()) << "\n";
      out << "result " << (passed ? "PASS" : "FAIL") << "\n";
    }
  }
  return passed ? kExitOk : kExitFailure;
}

// track ----------------------------------------------------------------------

OperatorSum start_operator(const RunConfig& cfg, int n) {
  const int k = cfg.source.value_or(1);
  const std::string s = cfg.start.value_or("minus");
  if (s == "minus") return ladder_minus(k, n);
  if (auto a = parse_axis(s)) return OperatorSum(spin_operator(k, *a, n));
  throw ArgumentError("unknown start operator '" + s + "' (minus, x, y or z)");
}

int cmd_track(const RunConfig& cfg, std::ostream& out) {
  const auto chain = resolve_chain(cfg);
  const auto format = pick_format(cfg, "text", {"text", "json", "csv"});
  const auto named = resolve_sequence(cfg, chain);
  const auto snaps = stroboscopic_track(named, chain, start_operator(cfg, chain.n()));
  if (format == "json") {
    out << to_json(snaps).dump(2) << "\n";
  } else if (format == "csv") {
    out << "time_s,label,operator\n";
    for (const auto& s : snaps) {
      out << format_number(s.time) << "," << s.label << "," << to_product_notation(s.op) << "\n";
    }
  } else {
    for (const auto& s : snaps) {
      out << "t=" << format_number(s.time) << " " << s.label << ": " << to_product_notation(s.op)
          << "\n";
    }
  }
  return kExitOk;
}

// parse ----------------------------------------------------------------------

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seq_file) throw ArgumentError("parse needs --seq <file>");
  const auto format = pick_format(cfg, "text", {"text", "json"});
  std::optional<int> n = cfg.n;
  if (cfg.chain_file || cfg.chain_inline) n = resolve_chain(cfg).n();
  PulseSequence seq;
  try {
    seq = parse_sequence(read_file(*cfg.seq_file), n);
  } catch (const ParseError& e) {
    throw ArgumentError(*cfg.seq_file + ": " + e.what());
  }
  if (format == "json") {
    out << json{{"n", seq.n},
                {"events", seq.events.size()},
                {"duration_s", std::stod(format_number(seq.total_duration()))},
                {"canonical", format_sequence(seq)}}
               .dump(2)
        << "\n";
  } else {
    out << format_sequence(seq);
  }
  return kExitOk;
}

// exchange -------------------------------------------------------------------

int cmd_exchange(const RunConfig& cfg, std::optional<int> cap_flag, std::ostream& out) {
  const auto chain = resolve_chain(cfg);
  const auto format = pick_format(cfg, "text", {"text", "json"});
  const auto r = exchange_experiment(chain, oracle_cap(cfg, cap_flag));
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& c : r.candidates) {
    out << c.name << " duration_s " << format_number(c.duration) << " forward "
        << (c.forward_ok() ? "ok" : "fail") << " reverse " << (c.reverse_ok() ? "ok" : "fail")
        << "\n";
  }
  return kExitOk;
}

void add_chain_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--chain", cfg.chain_file, "chain JSON file {\"n\", \"couplings_hz\"}");
  cmd->add_option("--n", cfg.n, "number of spins (equal couplings)");
  cmd->add_option("--J", cfg.j_hz, "coupling in Hz (default 1)");
}

void add_sequence_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--builder", cfg.builder, "soliton, isotropic or inept");
  cmd->add_option("--seq", cfg.seq_file, "pulse-program file");
  cmd->add_option("--source", cfg.source, "source spin (default 1)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-chain transfer sequences: build, verify, schedule and time."};
  app.name("spinchain");
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<int> cap_flag;
  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", cfg.config_file, "JSON config; flags take precedence");
    cmd->add_option("--format", cfg.format, "json, csv or text");
    cmd->add_option("--tol", cfg.tol, "overlap tolerance (default 1e-9)");
    cmd->add_option("--oracle-max-spins", cap_flag, "largest chain for the dense oracle (default 12)");
    cmd->add_option("--backend", cfg.backend, "heisenberg, dense or both");
  };

  auto* verify = app.add_subcommand("verify", "check a transfer I_source -> I_target");
  common(verify);
  add_chain_options(verify, cfg);
  add_sequence_options(verify, cfg);
  verify->add_option("--target", cfg.target, "target spin (default n)");
  verify->add_option("--component", cfg.component, "x, y, z or all (default all)");

  auto* table = app.add_subcommand("table", "timing table of the transfer strategies");
  common(table);
  table->add_option("--n-max", cfg.n_max, "largest chain length (default 10)");
  table->add_option("--J", cfg.j_hz, "coupling in Hz (default 1)");

  auto* schedule = app.add_subcommand("schedule", "echo schedule for an unequal chain");
  common(schedule);
  add_chain_options(schedule, cfg);
  schedule->add_flag("--check", cfg.check, "validate against the dense oracle");

  auto* track = app.add_subcommand("track", "stroboscopic snapshots of an evolving operator");
  common(track);
  add_chain_options(track, cfg);
  add_sequence_options(track, cfg);
  track->add_option("--start", cfg.start, "minus, x, y or z (default minus)");

  auto* parse = app.add_subcommand("parse", "lint a pulse-program file and print it canonically");
  common(parse);
  parse->add_option("--seq", cfg.seq_file, "pulse-program file")->required();
  parse->add_option("--n", cfg.n, "chain length for range checks");
  parse->add_option("--chain", cfg.chain_file, "chain JSON file for range checks");

  auto* exchange = app.add_subcommand("exchange", "simultaneous 1 <-> n exchange candidates");
  common(exchange);
  add_chain_options(exchange, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    merge_config(cfg);
    if (verify->parsed()) return cmd_verify(cfg, cap_flag, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (schedule->parsed()) return cmd_schedule(cfg, cap_flag, out);
    if (track->parsed()) return cmd_track(cfg, out);
    if (parse->parsed()) return cmd_parse(cfg, out);
    if (exchange->parsed()) return cmd_exchange(cfg, cap_flag, out);
  } catch (const ScheduleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spinchain
