#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symcone/caratheodory.hpp"
#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/dual_chain.hpp"
#include "symcone/errors.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/json_io.hpp"
#include "symcone/monoid.hpp"
#include "symcone/parallel.hpp"

namespace symcone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kVerifiedFalse = 2,
  kRejected = 3,
  kResource = 4,
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"dual-chain",   "hilbert",   "gordan",    "stab-index", "caratheodory",
                                              "min-terms",    "oracle-hb", "localize",  "dualize"};
  return names;
}

struct RunConfig {
  std::string command;
  std::string input_path;
  std::optional<std::size_t> n_max;  ///< default: max width + 3
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t norm_bound = 12;
  std::optional<std::size_t> budget;  ///< LP calls (min-terms) or points (oracle-hb)
  bool emit_witnesses = false;
  std::optional<std::size_t> dim;     ///< ambient dimension for single-cone commands
  std::optional<std::string> target;  ///< JSON array overriding the input's "target"
  std::optional<std::uint64_t> seed;  ///< reserved; every command is deterministic
  std::size_t threads = 1;
};

namespace detail {

using json_io::Json;
using json_io::to_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read input file \"" + path + "\"");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// --dim, or the largest width among the raw generators.
inline std::size_t ambient_dim(const RunConfig& cfg, const std::vector<FsVector>& gens) {
  std::size_t w = 1;
  for (const auto& g : gens) {
    w = std::max(w, g.width());
  }
  return cfg.dim.value_or(w);
}

inline Json certificate_json(const StabilizationCertificate& cert, bool witnesses) {
  Json j;
  j["r"] = cert.index;
  Json fails = Json::array();
  for (const auto& f : cert.failures) {
    fails.push_back(Json{{"candidate", f.candidate},
                         {"generator", to_json(f.generator, f.dim)},
                         {"dim", f.dim},
                         {"violated", to_json(f.violated)}});
  }
  j["failed_candidates"] = std::move(fails);
  if (witnesses) {
    Json ws = Json::array();
    for (const auto& w : cert.witnesses) {
      ws.push_back(Json{{"generator", to_json(w.generator, w.dim)}, {"dim", w.dim},
                        {"witness", to_json(w.witness, w.dim)}});
    }
    j["witnesses"] = std::move(ws);
  }
  return j;
}

inline Json dual_chain_json(const DualChainReport& rep, bool witnesses) {
  const auto& b = rep.basis;
  Json j;
  j["r"] = b.r;
  j["F_r"] = json_io::vectors_json(b.F, b.r);
  j["excluded_ray"] = b.excluded_ray ? to_json(*b.excluded_ray, b.r) : Json(nullptr);
  j["degenerate"] = b.degenerate;
  j["dual_has_lineality"] = b.dual_has_lineality;
  Json slices = Json::array();
  for (const auto& s : rep.slices) {
    Json sj;
    sj["n"] = s.n;
    sj["verified"] = s.verified;
    if (s.error) {
      sj["error"] = *s.error;
    }
    if (s.counterexample) {
      sj["counterexample"] = to_json(*s.counterexample, s.n);
    }
    sj["minimized"] = json_io::vectors_json(s.minimized, s.n);
    if (witnesses) {
      Json a = Json::array();
      for (const auto& w : s.dual_in_padded) {
        a.push_back(Json{{"generator", to_json(w.generator, s.n)}, {"witness", to_json(w.witness, s.n)}});
      }
      Json bj = Json::array();
      for (const auto& w : s.padded_in_dual) {
        bj.push_back(Json{{"generator", to_json(w.generator, s.n)}, {"witness", to_json(w.witness, s.n)}});
      }
      sj["witnesses"] = Json{{"dual_in_padded", std::move(a)}, {"padded_in_dual", std::move(bj)}};
    }
    slices.push_back(std::move(sj));
  }
  j["slices"] = std::move(slices);
  j["verdict"] = rep.verdict;
  return j;
}

inline FsVector target_vector(const RunConfig& cfg, const json_io::GeneratorInput& in) {
  if (cfg.target) {
    return json_io::parse_vector(json_io::parse_text(*cfg.target), "--target");
  }
  if (in.target) {
    return *in.target;
  }
  throw PreconditionError("this command needs a target vector (--target or \"target\" in the input)");
}

struct Outcome {
  Json report;
  int code = kSuccess;
  std::string summary;
};

inline Outcome dispatch(const RunConfig& cfg, const json_io::GeneratorInput& in) {
  // Chain commands use A up to symmetry; single-cone commands use the raw list.
  const GeneratorSet a(in.generators);
  const std::vector<FsVector>& raw = in.generators;
  const std::size_t n_max = cfg.n_max.value_or(a.max_width() + 3);
  Outcome o;
  o.report["command"] = cfg.command;
  o.report["generators"] = json_io::vectors_json(raw);
  const std::string& c = cfg.command;

  if (c == "localize") {
    const std::size_t n = cfg.dim.value_or(std::max<std::size_t>(a.max_width(), 1));
    o.report["n"] = n;
    o.report["cone"] = to_json(localize(a, n, cfg.orbit_cap));
    o.summary = "localized to R^" + std::to_string(n);
  } else if (c == "dualize") {
    const std::size_t n = ambient_dim(cfg, raw);
    const LocalCone cone = from_generators(raw, n);
    o.report["cone"] = to_json(cone);
    o.report["dual"] = to_json(dualize(cone));
    o.summary = "dualized a cone with " + std::to_string(cone.rays().size()) + " rays in R^" + std::to_string(n);
  } else if (c == "stab-index") {
    const auto cert = stability_index(a, cfg.orbit_cap);
    o.report["certificate"] = certificate_json(cert, cfg.emit_witnesses);
    o.summary = "stability index r = " + std::to_string(cert.index);
  } else if (c == "dual-chain") {
    const auto rep = verify_dual_chain(a, n_max, cfg.orbit_cap, cfg.threads);
    o.report["dual_chain"] = dual_chain_json(rep, cfg.emit_witnesses);
    o.code = rep.verdict ? kSuccess : kVerifiedFalse;
    o.summary = "dual chain r = " + std::to_string(rep.basis.r) + ", |F_r| = " + std::to_string(rep.basis.F.size()) +
                (rep.verdict ? ", verified" : ", NOT verified") + " for n = " + std::to_string(rep.basis.r) + ".." +
                std::to_string(n_max);
  } else if (c == "hilbert") {
    require_nonnegative(a, "hilbert");
    require_integral(a, "hilbert");
    const std::size_t n = ambient_dim(cfg, raw);
    const auto hb = hilbert_basis(from_generators(raw, n));
    o.report["hilbert_basis"] = to_json(hb);
    o.summary = std::to_string(hb.elements.size()) + " Hilbert basis elements in R^" + std::to_string(n);
  } else if (c == "oracle-hb") {
    require_nonnegative(a, "oracle-hb");
    require_integral(a, "oracle-hb");
    const std::size_t n = ambient_dim(cfg, raw);
    const auto hb = brute_force_hilbert(from_generators(raw, n), static_cast<std::int64_t>(cfg.norm_bound),
                                        cfg.budget.value_or(2'000'000));
    o.report["norm_bound"] = cfg.norm_bound;
    o.report["hilbert_basis"] = to_json(hb);
    o.summary = std::to_string(hb.elements.size()) + " irreducibles of norm <= " + std::to_string(cfg.norm_bound);
  } else if (c == "gordan") {
    const auto rep = gordan(a, n_max, cfg.orbit_cap, cfg.threads);
    const auto& st = rep.stabilization;
    Json j;
    j["r_cone"] = rep.r_cone;
    j["cone_certificate"] = certificate_json(rep.cone_certificate, cfg.emit_witnesses);
    j["window"] = Json::array({1, n_max});
    j["r_hilbert"] = st.r_hilbert;
    j["stabilization_observed"] = st.observed;
    j["containment"] = st.containment;
    Json norms = Json::array();
    for (const auto& x : st.norms) {
      norms.push_back(x.get_str());
    }
    j["norms"] = std::move(norms);
    j["norms_nonincreasing"] = st.norms_nonincreasing;
    j["norm_rise_at"] = st.norm_rise_at ? Json(*st.norm_rise_at) : Json(nullptr);
    j["support_sizes"] = st.support_sizes;
    j["support_bound"] = rep.support_bound;
    Json bases = Json::array();
    for (const auto& hb : rep.bases) {
      bases.push_back(to_json(hb));
    }
    j["bases"] = std::move(bases);
    const auto dual = verify_dual_chain(a, std::max(n_max, rep.r_cone), cfg.orbit_cap, cfg.threads);
    j["dual_chain"] = Json{{"r", dual.basis.r}, {"F_r", json_io::vectors_json(dual.basis.F, dual.basis.r)},
                           {"verdict", dual.verdict}};
    j["verdict"] = rep.verdict;
    j["certification"] = "window-certified over the dimensions listed; persistence beyond the window is a theorem, "
                         "not a computation";
    o.report["gordan"] = std::move(j);
    o.code = rep.verdict ? kSuccess : kVerifiedFalse;
    o.summary = "r_cone = " + std::to_string(rep.r_cone) + ", r_hilbert = " + std::to_string(st.r_hilbert) +
                ", support bound " + std::to_string(rep.support_bound) + (rep.verdict ? ", stabilized" : ", NOT stabilized") +
                " in window 1.." + std::to_string(n_max);
  } else if (c == "caratheodory") {
    require_support_bound_hypothesis(a);
    const FsVector u = target_vector(cfg, in);
    const auto d = decompose(a, u, cfg.orbit_cap);
    const std::size_t big = std::max<std::size_t>({u.width(), a.max_width(), 1});
    Json terms = Json::array();
    for (const auto& t : d.terms) {
      terms.push_back(Json{{"lambda", to_json(t.lambda)},
                           {"base_index", t.base_index},
                           {"generator", to_json(a[t.base_index], big)},
                           {"perm", to_json(t.perm)},
                           {"vector", to_json(t.vector, big)}});
    }
    o.report["target"] = to_json(u, big);
    o.report["terms"] = std::move(terms);
    o.report["support_size"] = u.support_size();
    o.report["within_support_bound"] = d.terms.size() <= u.support_size();
    o.summary = std::to_string(d.terms.size()) + " terms for a target of support size " +
                std::to_string(u.support_size());
  } else if (c == "min-terms") {
    const FsVector u = target_vector(cfg, in);
    const std::size_t n = cfg.dim.value_or(std::max<std::size_t>(u.width(), 1));
    const auto r = min_terms(a, u, n, cfg.budget.value_or(100000), cfg.orbit_cap);
    Json combo = Json::array();
    for (const auto& [x, lambda] : r.combination) {
      combo.push_back(Json{{"vector", to_json(x, n)}, {"lambda", to_json(lambda)}});
    }
    o.report["target"] = to_json(u, n);
    o.report["dim"] = n;
    o.report["min_terms"] = r.count;
    o.report["support_size"] = u.support_size();
    o.report["combination"] = std::move(combo);
    o.report["lp_calls"] = r.lp_calls;
    o.summary = "minimum of " + std::to_string(r.count) + " terms (support size " + std::to_string(u.support_size()) +
                ")";
  } else {
    throw PreconditionError("unknown command \"" + c + "\"");
  }
  return o;
}

inline Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

} // namespace detail

/// Runs one command on JSON input text. The report goes to `out`, a one-line
/// summary or diagnostic to `err`. Returns the process exit status.
inline int run_text(const RunConfig& cfg, const std::string& input, std::ostream& out, std::ostream& err) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end()) {
    err << "symcone: unknown command \"" << cfg.command << "\"\n";
    out << detail::error_json("usage", "unknown command \"" + cfg.command + "\"").dump(2) << "\n";
    return kUsage;
  }
  if (cfg.orbit_cap == 0 || cfg.norm_bound == 0 || (cfg.budget && *cfg.budget == 0) || (cfg.n_max && *cfg.n_max == 0) ||
      (cfg.dim && *cfg.dim == 0) || cfg.threads == 0) {
    err << "symcone: numeric limits must be positive\n";
    out << detail::error_json("usage", "numeric limits must be positive").dump(2) << "\n";
    return kUsage;
  }
  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << "symcone " << cfg.command << ": " << message << "\n";
    out << detail::error_json(kind, message).dump(2) << "\n";
    return code;
  };
  try {
    const auto parsed = json_io::parse_generator_input(input);
    auto outcome = detail::dispatch(cfg, parsed);
    out << outcome.report.dump(2) << "\n";
    err << "symcone " << cfg.command << ": " << outcome.summary << "\n";
    return outcome.code;
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kUsage);
  } catch (const NonMemberError& e) {
    return fail("non-member", e.what(), kVerifiedFalse);
  } catch (const RejectedInput& e) {
    return fail("rejected", e.what(), kRejected);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), kResource);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), kUsage);
  } catch (const Error& e) {
    return fail("internal", e.what(), kUsage);
  }
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = detail::read_file(cfg.input_path);
  } catch (const ParseError& e) {
    err << "symcone: " << e.what() << "\n";
    out << detail::error_json("parse", e.what()).dump(2) << "\n";
    return kUsage;
  }
  return run_text(cfg, text, out, err);
}

} // namespace symcone::cli
