// SPDX-License-Identifier: Apache-2.0
// scpm: command-line front end over the libscpm C interface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scpm/scpm.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kConfig = 2, kInvariant = 3 };

struct Failure {
  int code;
  std::string message;
};

void check(scpm_status st) {
  if (st == SCPM_OK) return;
  const int code = st == SCPM_ERR_INPUT ? kInput : st == SCPM_ERR_CONFIG ? kConfig : kInvariant;
  throw Failure{code, scpm_last_error()};
}

[[noreturn]] void config_error(const std::string& msg) { throw Failure{kConfig, msg}; }

struct StreamFree {
  void operator()(scpm_stream* s) const { scpm_stream_free(s); }
};
struct ContextFree {
  void operator()(scpm_context* c) const { scpm_context_free(c); }
};
struct PatternsFree {
  void operator()(scpm_patterns* p) const { scpm_patterns_free(p); }
};
using Stream = std::unique_ptr<scpm_stream, StreamFree>;
using Context = std::unique_ptr<scpm_context, ContextFree>;
using Patterns = std::unique_ptr<scpm_patterns, PatternsFree>;

std::string fetch(size_t (*get)(const scpm_patterns*, size_t, char*, size_t), const scpm_patterns* p,
                  size_t i) {
  const size_t n = get(p, i, nullptr, 0);
  std::string s(n + 1, '\0');
  get(p, i, s.data(), s.size());
  s.resize(n);
  return s;
}

std::string absolute(const std::string& path) {
  return path.empty() ? path : fs::absolute(path).lexically_normal().string();
}

// Flags shared by commands reading a stream and its attributes.
struct InputOptions {
  std::string stream;
  std::string format = "auto";
  std::string presence;
  bool directed = false;
  std::vector<double> horizon;
  double resolution = 1;
  double delta = 20;
  std::string attributes;
  std::string hs_metadata, hs_facebook, hs_friendship, hs_diary, hs_contacts;
  std::string core;
  int64_t min_support = 1;
  std::string measure = "duration";
  size_t min_intent_size = 0;
  std::optional<uint64_t> item_seed;
  unsigned threads = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--stream", stream, "link stream file");
    cmd->add_option("--format", format, "auto, triples, quadruples or sociopatterns")
        ->capture_default_str();
    cmd->add_option("--presence", presence, "optional presence file (node begin end)");
    cmd->add_flag("--directed", directed, "read interactions as directed");
    cmd->add_option("--horizon", horizon, "time horizon as BEGIN,END in seconds")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--resolution", resolution, "ticks per second")->capture_default_str();
    cmd->add_option("--delta", delta, "seconds each timestamped contact extends backwards")
        ->capture_default_str();
    cmd->add_option("--attributes", attributes, "node,item1;item2 attribute file");
    cmd->add_option("--hs-metadata", hs_metadata, "high-school metadata (id class gender)");
    cmd->add_option("--hs-facebook", hs_facebook, "high-school Facebook pairs");
    cmd->add_option("--hs-friendship", hs_friendship, "high-school declared friendships");
    cmd->add_option("--hs-diary", hs_diary, "high-school contact diary");
    cmd->add_option("--hs-contacts", hs_contacts, "sociopatterns contacts used for class items");
    cmd->add_option("--core", core,
                    "identity, star-sat:K or ha:H,A (default star-sat:2, or ha:2,2 when directed)");
    cmd->add_option("--min-support", min_support, "minimum support")->capture_default_str();
    cmd->add_option("--measure", measure, "support measure: duration or nodes")
        ->check(CLI::IsMember({"duration", "nodes"}))
        ->capture_default_str();
    cmd->add_option("--min-intent-size", min_intent_size, "drop patterns with fewer items");
    cmd->add_option("--item-seed", item_seed, "shuffle the item order with this seed");
    cmd->add_option("--threads", threads, "worker threads (default: SCPM_THREADS or 1)");
  }

  bool hs327() const {
    return !hs_metadata.empty() || !hs_facebook.empty() || !hs_friendship.empty() ||
           !hs_diary.empty() || !hs_contacts.empty();
  }

  std::string effective_core() const {
    if (!core.empty()) return core;
    return directed ? "ha:2,2" : "star-sat:2";
  }

  void validate() const {
    if (stream.empty()) config_error("--stream is required");
    if (attributes.empty() && !hs327()) config_error("--attributes or an --hs-* source is required");
    if (!attributes.empty() && hs327()) config_error("--attributes and --hs-* sources are exclusive");
  }

  json to_json() const {
    json j;
    j["stream"] = absolute(stream);
    j["format"] = format;
    j["presence"] = presence.empty() ? json(nullptr) : json(absolute(presence));
    j["directed"] = directed;
    j["horizon"] = horizon.empty() ? json(nullptr) : json(horizon);
    j["resolution"] = resolution;
    j["delta"] = delta;
    if (hs327()) {
      j["attributes"] = nullptr;
      j["hs327"] = {{"metadata", absolute(hs_metadata)},   {"facebook", absolute(hs_facebook)},
                    {"friendship", absolute(hs_friendship)}, {"diary", absolute(hs_diary)},
                    {"contacts", absolute(hs_contacts)}};
    } else {
      j["attributes"] = absolute(attributes);
    }
    j["core"] = effective_core();
    j["min_support"] = min_support;
    j["measure"] = measure;
    j["min_intent_size"] = min_intent_size;
    j["item_seed"] = item_seed ? json(*item_seed) : json(nullptr);
    return j;
  }

  void from_json(const json& j) {
    stream = j.at("stream").get<std::string>();
    format = j.value("format", "auto");
    presence = j.at("presence").is_null() ? "" : j.at("presence").get<std::string>();
    directed = j.value("directed", false);
    horizon = j.at("horizon").is_null() ? std::vector<double>{} : j.at("horizon").get<std::vector<double>>();
    resolution = j.value("resolution", 1.0);
    delta = j.value("delta", 20.0);
    if (j.contains("hs327")) {
      const auto& h = j.at("hs327");
      hs_metadata = h.value("metadata", "");
      hs_facebook = h.value("facebook", "");
      hs_friendship = h.value("friendship", "");
      hs_diary = h.value("diary", "");
      hs_contacts = h.value("contacts", "");
    } else {
      attributes = j.at("attributes").get<std::string>();
    }
    core = j.at("core").get<std::string>();
    min_support = j.at("min_support").get<int64_t>();
    measure = j.value("measure", "duration");
    min_intent_size = j.value("min_intent_size", size_t{0});
    if (!j.at("item_seed").is_null()) item_seed = j.at("item_seed").get<uint64_t>();
  }

  Stream load_stream() const {
    scpm_ingest_options opts;
    scpm_ingest_options_init(&opts);
    opts.resolution = resolution;
    opts.instant_extension = delta;
    opts.directed = directed;
    if (!horizon.empty()) {
      opts.has_horizon = 1;
      opts.horizon_begin = static_cast<int64_t>(std::llround(horizon[0] * resolution));
      opts.horizon_end = static_cast<int64_t>(std::llround(horizon[1] * resolution));
    }
    scpm_stream* s = nullptr;
    check(scpm_stream_load(stream.c_str(), format.c_str(),
                           presence.empty() ? nullptr : presence.c_str(), &opts, &s));
    return Stream(s);
  }

  Context load_context(const scpm_stream* s) const {
    auto opt = [](const std::string& p) { return p.empty() ? nullptr : p.c_str(); };
    scpm_context* c = nullptr;
    if (hs327())
      check(scpm_context_load_hs327(s, opt(hs_metadata), opt(hs_facebook), opt(hs_friendship),
                                    opt(hs_diary), opt(hs_contacts), &c));
    else
      check(scpm_context_load_csv(s, attributes.c_str(), &c));
    for (size_t i = 0; i < scpm_context_warning_count(c); ++i) {
      std::string w(scpm_context_warning(c, i, nullptr, 0) + 1, '\0');
      scpm_context_warning(c, i, w.data(), w.size());
      w.pop_back();
      std::cerr << "warning: " << w << "\n";
    }
    return Context(c);
  }

  scpm_miner_config miner_config(const std::string& core_text) const {
    scpm_miner_config cfg;
    scpm_miner_config_init(&cfg);
    cfg.core = core_text.c_str();
    cfg.min_support = min_support;
    cfg.measure_nodes = measure == "nodes";
    cfg.min_intent_size = min_intent_size;
    cfg.threads = threads;
    cfg.shuffle_items = item_seed.has_value();
    cfg.item_seed = item_seed.value_or(0);
    return cfg;
  }
};

json read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kInput, "cannot open manifest '" + path + "'"};
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Failure{kInput, path + ": " + e.what()};
  }
}

void write_manifest(const std::string& out_path, json manifest) {
  const std::string path = out_path + ".manifest.json";
  std::ofstream out(path);
  if (!out) throw Failure{kInput, "cannot write '" + path + "'"};
  out << manifest.dump(2) << "\n";
  std::cerr << "manifest: " << path << "\n";
}

void print_warnings(const scpm_patterns* p) {
  for (size_t i = 0; i < scpm_patterns_warning_count(p); ++i)
    std::cerr << "warning: " << fetch(scpm_patterns_warning, p, i) << "\n";
}

void emit(const scpm_patterns* p, const std::string& out) {
  if (!out.empty()) {
    check(scpm_patterns_write_jsonl(p, out.c_str()));
    return;
  }
  for (size_t i = 0; i < scpm_patterns_count(p); ++i)
    std::cout << fetch(scpm_patterns_record_json, p, i) << "\n";
}

// ---- mine -----------------------------------------------------------------

struct MineCommand {
  InputOptions in;
  std::string out;
  std::string manifest;

  int run() {
    if (!manifest.empty()) {
      const json m = read_manifest(manifest);
      if (m.value("command", "") != "mine") config_error("manifest is not a mine run");
      const std::string keep_out = out;
      in = InputOptions{};
      in.from_json(m);
      out = keep_out.empty() && !m.at("output").is_null() ? m.at("output").get<std::string>() : keep_out;
    }
    in.validate();
    const auto start = std::chrono::steady_clock::now();
    const Stream s = in.load_stream();
    const Context c = in.load_context(s.get());
    const std::string core = in.effective_core();
    const scpm_miner_config cfg = in.miner_config(core);
    scpm_patterns* raw = nullptr;
    check(scpm_mine(s.get(), c.get(), &cfg, &raw));
    const Patterns p(raw);
    emit(p.get(), out);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    print_warnings(p.get());
    std::map<size_t, size_t> per_depth;
    for (size_t i = 0; i < scpm_patterns_count(p.get()); ++i) ++per_depth[scpm_patterns_depth(p.get(), i)];
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    summary << "patterns: " << scpm_patterns_count(p.get()) << "\n"
            << "core: " << core << ", min support: " << in.min_support << " (" << in.measure << ")\n"
            << "candidates: " << scpm_patterns_candidates(p.get()) << "\n"
            << "wall time: " << std::fixed << std::setprecision(3) << wall << " s\n"
            << "per depth:";
    for (const auto& [d, n] : per_depth) summary << " " << d << ":" << n;
    summary << "\n";

    if (!out.empty()) {
      json m;
      m["command"] = "mine";
      const json inputs = in.to_json();
      for (const auto& [k, v] : inputs.items()) m[k] = v;
      m["output"] = absolute(out);
      write_manifest(out, m);
    }
    return kOk;
  }
};

// ---- select ---------------------------------------------------------------

std::string beta_suffix(const std::string& out, double beta) {
  const fs::path p(out);
  std::ostringstream name;
  name << p.stem().string() << ".beta" << beta << p.extension().string();
  return (p.parent_path() / name.str()).string();
}

struct SelectCommand {
  std::string input;
  std::vector<double> betas{0.0};
  std::string g = "support";
  size_t min_intent_size = 0;
  std::string out;
  std::string manifest;

  int run() {
    if (!manifest.empty()) {
      const json m = read_manifest(manifest);
      if (m.value("command", "") != "select") config_error("manifest is not a select run");
      input = m.at("input").get<std::string>();
      betas = m.at("beta").get<std::vector<double>>();
      g = m.at("g").get<std::string>();
      min_intent_size = m.value("min_intent_size", size_t{0});
      if (out.empty() && !m.at("output").is_null()) out = m.at("output").get<std::string>();
    }
    if (input.empty()) config_error("--in is required");
    if (betas.empty()) config_error("--beta needs at least one value");
    scpm_patterns* raw = nullptr;
    check(scpm_patterns_load_jsonl(input.c_str(), &raw));
    Patterns all(raw);
    if (min_intent_size > 0) {
      check(scpm_filter_min_intent(all.get(), min_intent_size, &raw));
      all.reset(raw);
    }
    const size_t total = scpm_patterns_count(all.get());
    std::ostream& report = out.empty() ? std::cerr : std::cout;
    report << "beta\tkept\trejected\n";
    for (double beta : betas) {
      check(scpm_select(all.get(), beta, g.c_str(), &raw));
      const Patterns kept(raw);
      const size_t n = scpm_patterns_count(kept.get());
      report << beta << "\t" << n << "\t" << total - n << "\n";
      if (betas.size() == 1)
        emit(kept.get(), out);
      else if (!out.empty())
        check(scpm_patterns_write_jsonl(kept.get(), beta_suffix(out, beta).c_str()));
    }
    if (!out.empty()) {
      json m;
      m["command"] = "select";
      m["input"] = absolute(input);
      m["beta"] = betas;
      m["g"] = g;
      m["min_intent_size"] = min_intent_size;
      m["output"] = absolute(out);
      write_manifest(out, m);
    }
    return kOk;
  }
};

// ---- inspect --------------------------------------------------------------

struct InspectCommand {
  std::string input;
  std::string g = "support";
  size_t limit = 0;

  int run() {
    scpm_patterns* raw = nullptr;
    check(scpm_patterns_load_jsonl(input.c_str(), &raw));
    const Patterns p(raw);
    const size_t n = scpm_patterns_count(p.get());
    std::vector<size_t> order(n);
    check(scpm_patterns_order(p.get(), g.c_str(), order.data()));
    std::cout << std::left << std::setw(40) << "intent" << std::right << std::setw(8) << "nodes"
              << std::setw(12) << "duration" << "  span\n";
    const size_t shown = limit == 0 ? n : std::min(limit, n);
    for (size_t k = 0; k < shown; ++k) {
      const size_t i = order[k];
      int64_t b = 0, e = 0;
      scpm_patterns_time_span(p.get(), i, &b, &e);
      std::string intent = fetch(scpm_patterns_intent, p.get(), i);
      if (intent.empty()) intent = "(empty)";
      std::cout << std::left << std::setw(40) << intent << std::right << std::setw(8)
                << scpm_patterns_node_count(p.get(), i) << std::setw(12)
                << scpm_patterns_support_measure(p.get(), i) << "  [" << b << ", " << e << ")\n";
    }
    std::cout << n << " pattern" << (n == 1 ? "" : "s") << "\n";
    return kOk;
  }
};

// ---- static-compare -------------------------------------------------------

struct StaticCompareCommand {
  InputOptions in;
  int64_t static_min_support = 1;

  int run() {
    in.validate();
    const Stream s = in.load_stream();
    const Context c = in.load_context(s.get());
    const std::string core = in.effective_core();
    const scpm_miner_config cfg = in.miner_config(core);
    scpm_comparison cmp{};
    check(scpm_static_compare(s.get(), c.get(), &cfg, static_min_support, &cmp));
    std::cout << "core: " << core << "\n"
              << "stream patterns: " << cmp.stream_patterns << "\n"
              << "static patterns: " << cmp.static_patterns << "\n"
              << "stream intents missing from static: " << cmp.missing_from_static << "\n";
    if (cmp.missing_from_static > 0) {
      std::cerr << "error: stream closed intents are not all static closed intents\n";
      return kInvariant;
    }
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Core closed pattern mining on attributed stream graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(scpm_version()));

  MineCommand mine;
  auto* mine_cmd = app.add_subcommand("mine", "enumerate core closed patterns");
  mine.in.add_to(mine_cmd);
  mine_cmd->add_option("--out", mine.out, "output JSONL (stdout when omitted)");
  mine_cmd->add_option("--manifest", mine.manifest, "re-run the mine manifest");

  SelectCommand select;
  auto* select_cmd = app.add_subcommand("select", "g-beta pattern selection");
  select_cmd->add_option("--in", select.input, "mined JSONL");
  select_cmd->add_option("--beta", select.betas, "one or more beta values in [0,1]")->delimiter(',');
  select_cmd->add_option("--g", select.g, "support, nodes or intent")->capture_default_str();
  select_cmd->add_option("--min-intent-size", select.min_intent_size, "drop patterns with fewer items");
  select_cmd->add_option("--out", select.out,
                         "output JSONL; with several betas one file per beta (FILE.betaB.jsonl)");
  select_cmd->add_option("--manifest", select.manifest, "re-run the select manifest");

  InspectCommand inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "print patterns as a table");
  inspect_cmd->add_option("--in", inspect.input, "mined JSONL")->required();
  inspect_cmd->add_option("--g", inspect.g, "sort key: support, nodes or intent")->capture_default_str();
  inspect_cmd->add_option("--limit", inspect.limit, "rows to print (0 = all)");

  StaticCompareCommand compare;
  auto* compare_cmd = app.add_subcommand("static-compare", "compare with the induced static graph");
  compare.in.add_to(compare_cmd);
  compare_cmd->add_option("--static-min-support", compare.static_min_support,
                          "minimum node count of static patterns")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*mine_cmd) return mine.run();
    if (*select_cmd) return select.run();
    if (*inspect_cmd) return inspect.run();
    if (*compare_cmd) return compare.run();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed manifest: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
