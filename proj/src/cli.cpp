#include "cpnum/cli.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpnum/errors.hpp"
#include "cpnum/generators.hpp"
#include "cpnum/holes.hpp"
#include "cpnum/json_io.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  throw CLI::ValidationError("--format", "must be edge-list or json");
}

Graph load_graph(const std::string& path, const std::string& format) {
  return parse_graph(read_text_file(path), parse_format(format));
}

void emit(const json& j, const std::string& summary) {
  std::cout << j.dump(2) << std::endl;
  std::cerr << summary << std::endl;
}

struct WitnessChoice {
  CpWitness witness;
  json extra;
};

Reconstruction reconstruction_from_model_file(const std::string& path, const Graph& g) {
  json j = json::parse(read_text_file(path));
  if (j.is_object() && j.contains("kind")) {
    std::string kind = j["kind"].get<std::string>();
    ModelInstance built;
    if (kind == "circular")
      built = reconstruction_from_circular_model(circular_model_from_json(j));
    else if (kind == "strip") {
      StripInstance s = reconstruction_from_strip(strip_model_from_json(j));
      built = {std::move(s.graph), std::move(s.rec)};
    } else if (kind == "strip-composition")
      built = compose_strips(strip_composition_from_json(j));
    else
      throw ParseError("unknown model kind: " + kind);
    if (!built.graph.structurally_equal(g))
      throw DomainError("model file describes a different graph than the input");
    return built.rec;
  }
  // Otherwise a bare reconstruction.
  return reconstruction_from_json(j);
}

int cmd_analyze(const std::string& path, const std::string& format,
                std::size_t hole_limit) {
  Timer timer;
  std::string text = read_text_file(path);
  Graph g = parse_graph(text, parse_format(format));
  json j;
  j["command"] = "analyze";
  j["input_digest"] = fnv1a_hex(text);
  j["holes"] = enumerate_holes(g, hole_limit).size();
  j["hole_space_dim"] = hole_space_dim(g, hole_limit);
  if (g.vertex_count() > 0) {
    auto [v, cert] = find_good_vertex(g);
    j["good_vertex"] = v;
    j["defect"] = simplicial_defect(g, v).defect;
  } else {
    j["good_vertex"] = nullptr;
    j["defect"] = nullptr;
  }
  j["quasiline"] = is_quasiline(g).ok;
  j["wall_ms"] = timer.ms();
  emit(j, "analyzed " + path + ": holes=" + j["holes"].dump() +
              " dim=" + j["hole_space_dim"].dump() + " quasiline=" +
              j["quasiline"].dump());
  return 0;
}

int cmd_witness(const std::string& path, const std::string& format,
                const std::string& mode, const std::string& model_path,
                const std::string& out_path, std::size_t hole_limit) {
  Timer timer;
  std::string text = read_text_file(path);
  Graph g = parse_graph(text, parse_format(format));
  json j;
  j["command"] = "witness";
  j["mode"] = mode;
  j["input_digest"] = fnv1a_hex(text);
  CpWitness w;
  if (mode == "kim") {
    KimReport report = kim_witness(g, hole_limit);
    w = std::move(report.witness);
    j["holes"] = report.hole_count;
    j["hole_space_dim"] = report.hole_dim;
    if (!report.peels.empty()) {
      j["good_vertex"] = report.peels.front().vertex;
      j["defect"] = report.peels.front().defect;
    }
  } else if (mode == "opsut") {
    if (model_path.empty())
      throw CLI::ValidationError("--model", "opsut mode needs a model or reconstruction");
    Reconstruction r = reconstruction_from_model_file(model_path, g);
    OpsutReport report = opsut_witness(g, r);
    w = std::move(report.witness);
    j["stages"] = report.stages;
  } else {
    throw CLI::ValidationError("--mode", "must be kim or opsut");
  }
  VerifyResult check = verify_cp_witness(g, w);
  j["verified"] = check.ok;
  j["added"] = w.added;
  j["witness"] = witness_to_json(w);
  j["wall_ms"] = timer.ms();
  if (!out_path.empty()) write_text_file(out_path, witness_to_json(w).dump(2) + "\n");
  emit(j, "witness mode=" + mode + " added=" + std::to_string(w.added) +
              (check.ok ? " verified" : " FAILED: " + check.report));
  return check.ok ? 0 : 1;
}

int cmd_verify(const std::string& graph_path, const std::string& witness_path,
               const std::string& format) {
  Timer timer;
  Graph g = load_graph(graph_path, format);
  CpWitness w = witness_from_json(g, json::parse(read_text_file(witness_path)));
  VerifyResult check = verify_cp_witness(g, w);
  json j;
  j["command"] = "verify";
  j["ok"] = check.ok;
  j["report"] = check.report;
  j["added"] = w.added;
  j["wall_ms"] = timer.ms();
  emit(j, check.ok ? "witness verified" : "verification failed: " + check.report);
  return check.ok ? 0 : 1;
}

int cmd_generate(const std::string& family, int size, std::uint64_t seed,
                 const std::string& out_dir) {
  Rng rng(seed);
  std::string stem = out_dir + "/" + family + "-" + std::to_string(size) + "-" +
                     std::to_string(seed);
  json j;
  j["command"] = "generate";
  j["family"] = family;
  j["seed"] = seed;
  j["size"] = size;
  std::vector<std::string> files;

  auto write_graph = [&](const Graph& g) {
    std::string p = stem + ".graph";
    write_text_file(p, serialize_graph(g, GraphFormat::EdgeList));
    files.push_back(p);
  };
  if (family == "line-graph") {
    ModelInstance inst = random_line_graph_instance(std::max(2, size), rng);
    write_graph(inst.graph);
    std::string p = stem + ".rec.json";
    write_text_file(p, reconstruction_to_json(inst.rec).dump(2) + "\n");
    files.push_back(p);
  } else if (family == "circular") {
    CircularInstance inst = random_circular_instance(std::max(4, size),
                                                     std::max(2, size), rng);
    write_graph(inst.built.graph);
    std::string p = stem + ".model.json";
    write_text_file(p, circular_model_to_json(inst.model).dump(2) + "\n");
    files.push_back(p);
  } else if (family == "strips") {
    CompositionInstance inst = random_composition_instance(std::max(1, size / 4), rng);
    write_graph(inst.built.graph);
    std::string p = stem + ".model.json";
    write_text_file(p, strip_composition_to_json(inst.model).dump(2) + "\n");
    files.push_back(p);
  } else if (family == "random") {
    write_graph(random_graph(size, 0.4, rng));
  } else {
    throw CLI::ValidationError("--family",
                               "must be line-graph, circular, strips or random");
  }
  j["files"] = files;
  emit(j, "generated " + std::to_string(files.size()) + " file(s) under " + out_dir);
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& format, int k_max, int cap) {
  Timer timer;
  std::string text = read_text_file(path);
  Graph g = parse_graph(text, parse_format(format));
  if (g.vertex_count() + k_max > cap)
    throw CLI::ValidationError(
        "--k-max", "n + k_max exceeds the oracle cap of " + std::to_string(cap) +
                       "; the oracle is exponential and meant for desk-size inputs");
  std::optional<int> cp = brute_force_cp(g, k_max);
  json j;
  j["command"] = "oracle";
  j["input_digest"] = fnv1a_hex(text);
  j["k_max"] = k_max;
  if (cp)
    j["cp"] = *cp;
  else
    j["cp"] = nullptr;
  j["wall_ms"] = timer.ms();
  emit(j, cp ? "cp = " + std::to_string(*cp)
             : "cp exceeds k_max = " + std::to_string(k_max));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"competition number toolkit: witnesses, verification, instances"};
  app.require_subcommand(1);

  std::string format = "edge-list";
  app.add_option("--format", format, "graph file format: edge-list or json")
      ->capture_default_str();

  std::string graph_path, witness_path, model_path, out_path = ".";
  std::size_t hole_limit = kDefaultHoleLimit;
  int k_max = 4, cap = 12, size = 6;
  std::uint64_t seed = 1;
  std::string mode = "kim", family = "random", witness_out;

  CLI::App* analyze = app.add_subcommand("analyze", "holes, hole space, good vertex");
  analyze->add_option("graph", graph_path, "graph file")->required();
  analyze->add_option("--limit-holes", hole_limit, "hole enumeration limit");

  CLI::App* witness = app.add_subcommand("witness", "build a verified witness");
  witness->add_option("graph", graph_path, "graph file")->required();
  witness->add_option("--mode", mode, "kim or opsut")->capture_default_str();
  witness->add_option("--model", model_path, "model/reconstruction file (opsut)");
  witness->add_option("--out", witness_out, "write the witness JSON here");
  witness->add_option("--limit-holes", hole_limit, "hole enumeration limit");

  CLI::App* verify = app.add_subcommand("verify", "check a witness file");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("witness", witness_path, "witness JSON file")->required();

  CLI::App* generate = app.add_subcommand("generate", "emit instance files");
  generate->add_option("--family", family, "line-graph, circular, strips or random")
      ->capture_default_str();
  generate->add_option("--size", size, "size parameter")->capture_default_str();
  generate->add_option("--seed", seed, "random seed")->capture_default_str();
  generate->add_option("--out", out_path, "output directory")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "exact small-instance competition number");
  oracle->add_option("graph", graph_path, "graph file")->required();
  oracle->add_option("--k-max", k_max, "largest k to certify")->capture_default_str();
  oracle->add_option("--cap", cap, "refuse when n + k_max exceeds this")
      ->capture_default_str();

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargs{"cpnum"};
    for (const std::string& s : argv) cargs.push_back(s.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(graph_path, format, hole_limit);
    if (app.got_subcommand(witness))
      return cmd_witness(graph_path, format, mode, model_path, witness_out, hole_limit);
    if (app.got_subcommand(verify)) return cmd_verify(graph_path, witness_path, format);
    if (app.got_subcommand(generate)) return cmd_generate(family, size, seed, out_path);
    if (app.got_subcommand(oracle)) return cmd_oracle(graph_path, format, k_max, cap);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << std::endl;
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}

}  // namespace cpnum
