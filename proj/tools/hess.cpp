// Command-line front end: analysis, Poincare polynomials, the degree-two
// generation checker, exhaustive classification tables, Hilbert series, and
// DOT/JSON graph exports, with a byte-stable result cache.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <unistd.h>

#include "hesscoh/checks.hpp"
#include "hesscoh/cohomology.hpp"

using json = nlohmann::ordered_json;
using namespace hesscoh;

namespace {

constexpr const char* kVersionTag = "hesscoh-0.1.0";

struct CliConfig {
  bool pretty = false;
  bool no_cache = false;
  bool force = false;
  unsigned threads = 0;
  std::string cache_dir;
  std::string method = "auto";

  std::string resolved_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("HESSCOH_CACHE_DIR")) return env;
    return ".hesscoh-cache";
  }
  ResourceLimits limits() const {
    ResourceLimits lim;
    lim.force = force;
    lim.threads = threads;
    return lim;
  }
  GenMethod gen_method() const {
    if (method == "span") return GenMethod::Elimination;
    if (method == "pairing") return GenMethod::Pairing;
    if (method == "auto") return GenMethod::Auto;
    throw Error(ErrorKind::BadParameters, "method must be auto, span or pairing");
  }
};

std::string sanitize_key(const std::string& key) {
  std::string out;
  for (char c : key)
    out.push_back((isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '=') ? c : '_');
  return out;
}

// Returns the cached bytes, or runs the producer and stores its output with
// a write-then-rename so concurrent runs never see partial files.
std::string with_cache(const CliConfig& cfg, const std::string& key,
                       const std::function<std::string()>& produce) {
  if (cfg.no_cache) return produce();
  namespace fs = std::filesystem;
  const fs::path dir = cfg.resolved_cache_dir();
  const fs::path file = dir / (sanitize_key(std::string(kVersionTag) + "-" + key) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::string out = produce();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    std::ofstream o(tmp, std::ios::binary);
    o << out;
    o.close();
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  }
  return out;
}

void emit(const CliConfig& cfg, const std::string& compact) {
  if (!cfg.pretty) {
    std::cout << compact << "\n";
    return;
  }
  std::cout << json::parse(compact).dump(2) << "\n";
}

json lollipop_json(const HessenbergFunction& h) {
  const auto s = lollipop_form(h);
  if (!s) return nullptr;
  return json{{"a", s->a}, {"b", s->b}};
}

std::string cmd_analyze(const HessenbergFunction& h) {
  json out;
  out["h"] = h.to_string();
  out["n"] = h.size();
  out["connected"] = is_connected(h);
  out["dimension"] = dimension(h);
  const auto be = bottom_and_ell_sets(h);
  out["bottom"] = be.bottom;
  out["ell"] = be.ell;
  json hstar = json::array();
  for (int i = 1; i <= h.size(); ++i) hstar.push_back(h_star(h, i));
  out["h_star"] = hstar;
  out["flip"] = flip(h).to_string();
  out["lollipop"] = lollipop_json(h);
  out["forbidden_minor"] = has_forbidden_minor(h);
  if (!is_connected(h)) {
    const auto d = decompose_disconnected(h);
    out["split"] = {{"left", d.left.to_string()},
                    {"right", d.right.to_string()},
                    {"multiplicity", d.multiplicity.get_str()}};
  }
  return out.dump();
}

std::string cmd_poincare(const HessenbergFunction& h, unsigned threads) {
  const QPoly direct = poincare_direct(h, threads);
  const QPoly rec = poincare_recursive(h);
  json out;
  out["h"] = h.to_string();
  out["direct"] = direct.serialize();
  out["recursive"] = rec.serialize();
  bool closed_applies = h.size() >= 2;
  for (int j = 2; j <= h.size(); ++j) closed_applies = closed_applies && h(j) == h.size();
  if (closed_applies) {
    const QPoly closed = poincare_h1_closed(h.size(), h(1));
    out["closed_form"] = closed.serialize();
    out["methods_agree"] = direct == rec && direct == closed;
  } else {
    out["closed_form"] = nullptr;
    out["methods_agree"] = direct == rec;
  }
  out["pretty"] = direct.pretty();
  out["euler_characteristic"] = direct.eval_at_one().get_str();
  return out.dump();
}

std::string cmd_check_gen2(const CliConfig& cfg, const HessenbergFunction& h) {
  return is_degree2_generated(h, cfg.gen_method(), cfg.limits()).to_json();
}

std::string cmd_classify(const CliConfig& cfg, int n) {
  json rows = json::array();
  bool all_agree = true;
  int generated = 0;
  for (const auto& h : enumerate_hessenberg(n, true)) {
    const auto report = is_degree2_generated(h, cfg.gen_method(), cfg.limits());
    const bool lolli = lollipop_form(h).has_value();
    const bool agree = report.generated == lolli;
    all_agree = all_agree && agree;
    if (report.generated) ++generated;
    rows.push_back({{"h", h.to_string()},
                    {"lollipop", lollipop_json(h)},
                    {"generated", report.generated},
                    {"agree", agree}});
  }
  json out;
  out["n"] = n;
  out["connected_count"] = rows.size();
  out["generated_count"] = generated;
  out["rows"] = rows;
  out["all_agree"] = all_agree;
  return out.dump();
}

std::string cmd_hilbert(const CliConfig& cfg, const HessenbergFunction& h, int max_degree) {
  const int D = dimension(h);
  if (max_degree < 0 || max_degree > D) max_degree = D;
  json out;
  out["h"] = h.to_string();
  out["max_degree"] = max_degree;
  out["poincare"] = poincare_direct(h).serialize();
  out["invariants"] = hilb_invariants(h).serialize();
  out["invariant_quotient"] = invariant_quotient_hilbert(h, max_degree).serialize();
  out["subring"] = subring_hilbert(h, max_degree, cfg.limits()).serialize();
  const int n = h.size();
  if (n >= 4 && h == lollipop_pn_function(n)) {
    const auto b = subring_upper_bound(n);
    out["subring_upper_bound"] = b.combined.serialize();
    out["component_bounds"] = {{"a", b.a.serialize()},
                               {"b", b.b.serialize()},
                               {"c", b.c.serialize()},
                               {"d", b.d.serialize()}};
  }
  return out.dump();
}

int cmd_verify(const CliConfig& cfg, int n) {
  const auto results = run_size_checks(n);
  json rows = json::array();
  bool all = true;
  for (const auto& r : results) {
    rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  json out;
  out["n"] = n;
  out["checks"] = rows;
  out["all_pass"] = all;
  emit(cfg, out.dump());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of regular semisimple Hessenberg varieties"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_flag("--pretty", cfg.pretty, "indent JSON output");
  app.add_flag("--no-cache", cfg.no_cache, "bypass the result cache");
  app.add_flag("--force", cfg.force, "ignore resource gates");
  app.add_option("--threads", cfg.threads, "worker thread count (0 = hardware)");
  app.add_option("--cache-dir", cfg.cache_dir,
                 "cache directory (default $HESSCOH_CACHE_DIR or .hesscoh-cache)");
  app.add_option("--method", cfg.method, "checker engine: auto, span or pairing");

  std::string h_str;
  int n = 0, max_degree = -1, level = 0;
  bool want_dot = false, want_json = false;

  auto* analyze = app.add_subcommand("analyze", "diagram data for one function");
  analyze->add_option("values", h_str, "comma-separated values, e.g. 2,3,4,4")->required();

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial by all methods");
  poincare->add_option("values", h_str)->required();

  auto* gen2 = app.add_subcommand("check-gen2", "degree-two generation report");
  gen2->add_option("values", h_str)->required();

  auto* classify = app.add_subcommand("classify", "verdict table for all connected h");
  classify->add_option("-n,--size", n, "size")->required();

  auto* verify = app.add_subcommand("verify", "verification suite at one size");
  verify->add_option("-n,--size", n, "size")->required();

  auto* graph = app.add_subcommand("graph", "labeled graph export");
  graph->add_option("values", h_str)->required();
  graph->add_flag("--dot", want_dot, "DOT format (default)");
  graph->add_flag("--json", want_json, "adjacency JSON");
  graph->add_option("-r,--level", level, "restrict to the component set of { w : w(r) = n }");

  auto* hilbert = app.add_subcommand("hilbert", "invariant, quotient and subring series");
  hilbert->add_option("values", h_str)->required();
  hilbert->add_option("--max-degree", max_degree, "truncation degree (default dim)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto h = HessenbergFunction::parse(h_str);
      emit(cfg, with_cache(cfg, "analyze-" + h.to_string(), [&] { return cmd_analyze(h); }));
    } else if (poincare->parsed()) {
      const auto h = HessenbergFunction::parse(h_str);
      emit(cfg, with_cache(cfg, "poincare-" + h.to_string(),
                           [&] { return cmd_poincare(h, cfg.threads); }));
    } else if (gen2->parsed()) {
      const auto h = HessenbergFunction::parse(h_str);
      emit(cfg, with_cache(cfg, "gen2-" + h.to_string() + "-" + cfg.method,
                           [&] { return cmd_check_gen2(cfg, h); }));
    } else if (classify->parsed()) {
      emit(cfg, with_cache(cfg, "classify-n" + std::to_string(n) + "-" + cfg.method,
                           [&] { return cmd_classify(cfg, n); }));
    } else if (verify->parsed()) {
      return cmd_verify(cfg, n);
    } else if (graph->parsed()) {
      const auto h = HessenbergFunction::parse(h_str);
      if (level > 0) {
        const auto comps = fixed_level_components(h, level);
        if (want_json) {
          json out = json::array();
          for (const auto& c : comps) out.push_back(json::parse(export_json(c)));
          emit(cfg, out.dump());
        } else {
          for (const auto& c : comps) std::cout << export_dot(c);
        }
      } else {
        const auto g = build_graph(h);
        if (want_json)
          emit(cfg, export_json(g));
        else
          std::cout << export_dot(g);
      }
    } else if (hilbert->parsed()) {
      const auto h = HessenbergFunction::parse(h_str);
      emit(cfg, with_cache(cfg,
                           "hilbert-" + h.to_string() + "-d" + std::to_string(max_degree),
                           [&] { return cmd_hilbert(cfg, h, max_degree); }));
    }
  } catch (const Error& e) {
    json err;
    err["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return e.kind() == ErrorKind::TooLarge ? 2 : 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 0;
}
