#pragma once

// Subcommand implementations behind the `recolour` executable. Each command
// returns a RunReport; the executable maps decisions onto exit codes
// (0 = yes, 1 = no, 2 = inconclusive, 3 = error).

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "recolour/fpt.hpp"
#include "recolour/graph.hpp"
#include "recolour/hardness.hpp"
#include "recolour/io.hpp"
#include "recolour/oracle.hpp"
#include "recolour/solver3.hpp"

namespace recolour::cli {

enum class Decision { yes, no, inconclusive };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::inconclusive: return "inconclusive";
  }
  return "?";
}

inline Decision decision_from_string(const std::string& s) {
  if (s == "yes") return Decision::yes;
  if (s == "no") return Decision::no;
  if (s == "inconclusive") return Decision::inconclusive;
  throw RecolourError("unknown decision '" + s + "'");
}

inline int exit_code(Decision d) {
  switch (d) {
    case Decision::yes: return 0;
    case Decision::no: return 1;
    case Decision::inconclusive: return 2;
  }
  return 3;
}

inline constexpr int kErrorExit = 3;

struct RunReport {
  Decision decision = Decision::inconclusive;
  std::optional<std::uint64_t> distance;
  std::optional<std::string> witness_path;
  std::optional<std::size_t> witness_length;
  std::optional<bool> witness_verified;
  std::string solver;
  std::map<std::string, double> timings;  // milliseconds per phase
  std::optional<std::string> reason;
  std::optional<std::size_t> failing_step;  // 1-based
  std::optional<bool> exhausted;
  std::optional<std::size_t> explored;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
};

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["decision"] = to_string(r.decision);
  j["solver"] = r.solver;
  j["timings_ms"] = r.timings;
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("distance", r.distance);
  put("witness_path", r.witness_path);
  put("witness_length", r.witness_length);
  put("witness_verified", r.witness_verified);
  put("reason", r.reason);
  put("failing_step", r.failing_step);
  put("exhausted", r.exhausted);
  put("explored", r.explored);
  put("ell", r.ell);
  put("vertices", r.vertices);
  put("edges", r.edges);
  return j;
}

inline RunReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != 1) {
    throw RecolourError("unsupported report schema");
  }
  RunReport r;
  r.decision = decision_from_string(j.at("decision").get<std::string>());
  r.solver = j.at("solver").get<std::string>();
  r.timings = j.at("timings_ms").get<std::map<std::string, double>>();
  auto get = [&](const char* key, auto& opt) {
    if (j.contains(key)) {
      opt = j.at(key).get<typename std::decay_t<decltype(opt)>::value_type>();
    }
  };
  get("distance", r.distance);
  get("witness_path", r.witness_path);
  get("witness_length", r.witness_length);
  get("witness_verified", r.witness_verified);
  get("reason", r.reason);
  get("failing_step", r.failing_step);
  get("exhausted", r.exhausted);
  get("explored", r.explored);
  get("ell", r.ell);
  get("vertices", r.vertices);
  get("edges", r.edges);
  return r;
}

inline void print_report(std::ostream& out, const RunReport& r, bool json) {
  if (json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << "decision: " << to_string(r.decision) << '\n';
  if (!r.solver.empty()) out << "solver: " << r.solver << '\n';
  if (r.distance) out << "distance: " << *r.distance << '\n';
  if (r.ell) out << "ell: " << *r.ell << '\n';
  if (r.vertices) out << "vertices: " << *r.vertices << '\n';
  if (r.edges) out << "edges: " << *r.edges << '\n';
  if (r.witness_path) {
    out << "witness: " << *r.witness_path;
    if (r.witness_length) out << " (" << *r.witness_length << " steps)";
    out << '\n';
  }
  if (r.exhausted) out << "exhausted: " << (*r.exhausted ? "true" : "false") << '\n';
  if (r.explored) out << "explored: " << *r.explored << '\n';
  if (r.reason) out << "reason: " << *r.reason << '\n';
  if (r.failing_step) out << "failing step: " << *r.failing_step << '\n';
}

namespace detail {

class PhaseTimer {
 public:
  explicit PhaseTimer(RunReport& r) : report_(r) {}

  template <typename F>
  auto time(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(phase, start);
    } else {
      auto result = f();
      record(phase, start);
      return result;
    }
  }

 private:
  void record(const std::string& phase,
              std::chrono::steady_clock::time_point start) {
    const auto dt = std::chrono::steady_clock::now() - start;
    report_.timings[phase] +=
        std::chrono::duration<double, std::milli>(dt).count();
  }

  RunReport& report_;
};

inline ReconfigInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RecolourError("cannot open '" + path + "'");
  return read_instance(in);
}

inline void save_witness(const std::string& path, const RecolouringSequence& seq) {
  std::ofstream out(path);
  if (!out) throw RecolourError("cannot write '" + path + "'");
  write_witness(out, seq);
}

inline void attach_witness(RunReport& r, const ReconfigInstance& inst,
                           const RecolouringSequence& seq,
                           const std::optional<std::string>& path) {
  r.witness_length = seq.size();
  r.witness_verified =
      verify_recolouring(inst.graph, inst.k, inst.alpha, inst.beta, seq).accepted;
  if (path) {
    save_witness(*path, seq);
    r.witness_path = *path;
  }
}

}  // namespace detail

struct SolveOptions {
  std::optional<std::string> witness_path;
  std::optional<std::string> force_solver;  // exact-small-k, solver3, fpt, oracle
  std::size_t max_states = StateSpaceLimits{}.max_states;
};

inline RunReport cmd_solve(const std::string& input, const SolveOptions& opt = {}) {
  RunReport r;
  detail::PhaseTimer timer(r);
  const ReconfigInstance inst =
      timer.time("parse", [&] { return detail::load_instance(input); });
  r.ell = inst.ell;

  std::string solver = inst.k <= 2 ? "exact-small-k" : inst.k == 3 ? "solver3" : "fpt";
  if (opt.force_solver) {
    solver = *opt.force_solver;
    if (solver == "solver3" && inst.k != 3) {
      throw RecolourError("solver3 requires k = 3");
    }
    if (solver == "exact-small-k" && inst.k > 2) {
      throw RecolourError("exact-small-k requires k <= 2");
    }
    if (solver != "solver3" && solver != "exact-small-k" && solver != "fpt" &&
        solver != "oracle") {
      throw RecolourError("unknown solver '" + solver + "'");
    }
  }
  r.solver = solver;

  if (solver == "exact-small-k") {
    const auto res = timer.time("solve", [&] { return solve_small_k(inst); });
    r.decision = res.within_budget ? Decision::yes : Decision::no;
    if (res.distance) r.distance = *res.distance;
    if (res.within_budget) {
      timer.time("witness", [&] {
        detail::attach_witness(r, inst, *res.witness, opt.witness_path);
      });
    }
  } else if (solver == "solver3") {
    const auto res = timer.time("solve", [&] {
      return distance3(inst.graph, inst.alpha, inst.beta);
    });
    r.distance = res.distance;
    r.decision = res.reachable && *res.distance <= inst.ell ? Decision::yes
                                                            : Decision::no;
    if (!res.reachable) r.reason = "alpha and beta are in different components";
    if (r.decision == Decision::yes && opt.witness_path) {
      timer.time("witness", [&] {
        detail::attach_witness(r, inst, witness3(inst.graph, inst.alpha, inst.beta),
                               opt.witness_path);
      });
    }
  } else if (solver == "fpt") {
    const auto res = timer.time("solve", [&] { return fpt_solve(inst); });
    r.decision = res.yes ? Decision::yes : Decision::no;
    r.explored = res.explored;
    if (res.yes) {
      timer.time("witness", [&] {
        detail::attach_witness(r, inst, *res.witness, opt.witness_path);
      });
    }
  } else {
    StateSpaceLimits limits;
    limits.max_states = opt.max_states;
    const auto res = timer.time("solve", [&] { return oracle_distance(inst, limits); });
    r.exhausted = res.exhausted;
    r.explored = res.states_visited;
    r.distance = res.distance;
    if (res.distance) {
      r.decision = *res.distance <= inst.ell ? Decision::yes : Decision::no;
      if (r.decision == Decision::yes) {
        timer.time("witness", [&] {
          detail::attach_witness(r, inst, *res.witness, opt.witness_path);
        });
      }
    } else {
      r.decision = res.exhausted ? Decision::no : Decision::inconclusive;
      r.reason = res.exhausted ? "beta is not reachable from alpha"
                               : "state limit reached";
    }
  }
  return r;
}

inline RunReport cmd_oracle(const std::string& input,
                            std::size_t max_states = StateSpaceLimits{}.max_states,
                            const std::optional<std::string>& witness_path = {}) {
  SolveOptions opt;
  opt.force_solver = "oracle";
  opt.max_states = max_states;
  opt.witness_path = witness_path;
  return cmd_solve(input, opt);
}

struct GenOptions {
  int k = 4;
  std::string out_prefix = "gadget";
};

// Writes <prefix>.instance and <prefix>.roles.
inline RunReport cmd_gen_hs(const std::string& hs_file, const GenOptions& opt) {
  RunReport r;
  r.solver = "gen-hs";
  detail::PhaseTimer timer(r);
  const HittingSetInstance hs = timer.time("parse", [&] {
    std::ifstream in(hs_file);
    if (!in) throw RecolourError("cannot open '" + hs_file + "'");
    return read_hitting_set(in);
  });
  const GadgetInstance gi = timer.time("generate", [&] {
    return generate(preprocess(hs).instance, opt.k);
  });
  timer.time("write", [&] {
    std::ofstream inst_out(opt.out_prefix + ".instance");
    std::ofstream roles_out(opt.out_prefix + ".roles");
    if (!inst_out || !roles_out) {
      throw RecolourError("cannot write output files with prefix '" +
                          opt.out_prefix + "'");
    }
    write_instance(inst_out, gi.instance);
    write_roles(roles_out, gi);
  });
  r.decision = Decision::yes;
  r.ell = gi.instance.ell;
  r.vertices = gi.instance.graph.num_vertices();
  r.edges = gi.instance.graph.num_edges();
  return r;
}

inline RunReport cmd_verify(const std::string& input, const std::string& witness_file) {
  RunReport r;
  r.solver = "verify";
  detail::PhaseTimer timer(r);
  const ReconfigInstance inst =
      timer.time("parse", [&] { return detail::load_instance(input); });
  const RecolouringSequence seq = timer.time("parse", [&] {
    std::ifstream in(witness_file);
    if (!in) throw RecolourError("cannot open '" + witness_file + "'");
    return read_witness(in, inst.graph.num_vertices(), inst.k);
  });
  const auto rep = timer.time("verify", [&] {
    return verify_recolouring(inst.graph, inst.k, inst.alpha, inst.beta, seq);
  });
  r.ell = inst.ell;
  r.witness_path = witness_file;
  r.witness_length = seq.size();
  r.witness_verified = rep.accepted;
  r.decision = rep.accepted ? Decision::yes : Decision::no;
  if (!rep.accepted) {
    r.reason = rep.reason;
    if (rep.failing_step && *rep.failing_step < seq.size()) {
      r.failing_step = *rep.failing_step + 1;
    }
  }
  return r;
}

}  // namespace recolour::cli
