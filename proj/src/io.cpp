#include "spinchain/io.hpp"

#include <fstream>
#include <sstream>

#include "spinchain/error.hpp"
#include "spinchain/format.hpp"
#include "spinchain/program.hpp"

namespace spinchain {

using nlohmann::json;

namespace {

// Round to 12 significant digits so that JSON output is stable.
double rounded(double x) { return std::stod(format_number(x)); }

json overlaps_json(const std::array<Complex, 3>& ov) {
  json j = json::object();
  for (int i = 0; i < 3; ++i) j[std::string(1, axis_char(kAxes[i]))] = complex_json(ov[i]);
  return j;
}

json pulses_json(const std::vector<HardPulse>& pulses) {
  json j = json::array();
  for (const auto& p : pulses) j.push_back(format_event(p));
  return j;
}

}  // namespace

json complex_json(Complex z) {
  return {{"re", rounded(z.real())}, {"im", rounded(z.imag())}, {"abs", rounded(std::abs(z))}};
}

ChainSpec chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("couplings_hz")) {
    throw ArgumentError("chain JSON needs keys 'n' and 'couplings_hz'");
  }
  if (!j["n"].is_number_integer()) throw ArgumentError("chain 'n' must be an integer");
  if (!j["couplings_hz"].is_array()) throw ArgumentError("'couplings_hz' must be an array");
  std::vector<double> couplings;
  for (const auto& v : j["couplings_hz"]) {
    if (!v.is_number()) throw ArgumentError("couplings must be numbers");
    couplings.push_back(v.get<double>());
  }
  return ChainSpec(j["n"].get<int>(), std::move(couplings));
}

ChainSpec load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open chain file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ArgumentError("chain file '" + path + "': " + e.what());
  }
  return chain_from_json(j);
}

json to_json(const ChainSpec& chain) {
  return {{"n", chain.n()}, {"couplings_hz", chain.couplings()}};
}

json to_json(const TransferReport& r) {
  json j{{"source", r.source},
         {"target", r.target},
         {"duration_s", rounded(r.duration)},
         {"component_overlaps", overlaps_json(r.component_overlaps)},
         {"success", r.success()},
         {"sign_corrections", pulses_json(r.sign_corrections)}};
  j["backend_residual"] = r.backend_residual ? json(rounded(*r.backend_residual)) : json(nullptr);
  return j;
}

json to_json(const ExchangeReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json interior = json::array();
    for (std::size_t i = 0; i < c.interior.size(); ++i) {
      interior.push_back({{"spin", static_cast<int>(i) + 2}, {"overlap", complex_json(c.interior[i])}});
    }
    json jc{{"name", c.name},
            {"duration_s", rounded(c.duration)},
            {"forward", overlaps_json(c.forward)},
            {"reverse", overlaps_json(c.reverse)},
            {"forward_transfer", c.forward_ok()},
            {"reverse_transfer", c.reverse_ok()},
            {"interior_z_preservation", interior}};
    jc["backend_residual"] = c.backend_residual ? json(rounded(*c.backend_residual)) : json(nullptr);
    cands.push_back(jc);
  }
  return {{"n", r.n}, {"J_hz", r.j_hz}, {"candidates", cands}};
}

json to_json(const std::vector<Snapshot>& snapshots) {
  json arr = json::array();
  for (const auto& s : snapshots) {
    json axes = json::array();
    for (Axis a : s.dominant.axes) axes.push_back(std::string(1, axis_char(a)));
    arr.push_back({{"time_s", rounded(s.time)},
                   {"label", s.label},
                   {"operator", to_product_notation(s.op)},
                   {"dominant",
                    {{"positions", s.dominant.positions},
                     {"axes", axes},
                     {"weight", s.dominant.weight}}}});
  }
  return arr;
}

json to_json(const std::vector<TimingRow>& rows, double j_hz) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"tau_conv", rounded(r.tau_conv.value() / j_hz)},
                   {"tau_swap", rounded(r.tau_swap.value() / j_hz)},
                   {"tau_soliton", rounded(r.tau_soliton.value() / j_hz)},
                   {"step_conv", rounded(r.step_conv.value() / j_hz)},
                   {"step_swap", rounded(r.step_swap.value() / j_hz)},
                   {"step_soliton", rounded(r.step_soliton.value() / j_hz)},
                   {"ratio", rounded(to_double(r.ratio))}});
  }
  return arr;
}

json schedule_to_json(const UnequalSoliton& built, const ChainSpec& chain) {
  json flips = json::array();
  json steps = json::array();
  Rational offset = 0;
  for (std::size_t s = 0; s < built.schedules.size(); ++s) {
    const auto& sched = built.schedules[s];
    const auto& budget = built.budgets[s];
    json audit = json::array();
    for (const auto& a : sched.audit) {
      audit.push_back({{"coupling", a.coupling},
                       {"active", a.active},
                       {"target_s", rounded(to_double(a.target))},
                       {"accumulated_s", rounded(to_double(a.accumulated))},
                       {"exact", a.accumulated == a.target}});
    }
    for (const auto& f : sched.flips) {
      flips.push_back({{"time_s", rounded(to_double(offset + f.time))},
                       {"spin", f.spin},
                       {"axis", "x"},
                       {"angle_deg", 180}});
    }
    steps.push_back({{"step", budget.step},
                     {"label", budget.label},
                     {"start_s", rounded(to_double(offset))},
                     {"interval_s", rounded(to_double(sched.interval))},
                     {"active_couplings", budget.active},
                     {"flip_count", sched.flips.size()},
                     {"frame_restored", sched.frame_restored()},
                     {"audit", audit}});
    offset += sched.interval;
  }
  const auto& t = built.times;
  return {{"chain", to_json(chain)},
          {"times_s",
           {{"encode", rounded(to_double(t.encode))},
            {"propagate", rounded(to_double(t.propagate))},
            {"decode", rounded(to_double(t.decode))},
            {"total", rounded(to_double(t.total))}}},
          {"flips", flips},
          {"steps", steps}};
}

}  // namespace spinchain
