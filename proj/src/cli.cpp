#include "minorlab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorlab/embedding.hpp"
#include "minorlab/erdos_posa.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/gadgets.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/io.hpp"
#include "minorlab/linkage.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/surface.hpp"
#include "minorlab/treedec.hpp"

namespace minorlab {

namespace {

using json = nlohmann::json;

constexpr const char* kModelFormat = "minorlab-minor-model";
constexpr const char* kTightFormat = "minorlab-tight-construction";

struct Violation {
  std::string check, message;
};

struct Common {
  std::uint64_t budget = 50'000'000;
  int exact_cap = 400;
  std::uint64_t seed = 0;
  std::string format = "auto";
  std::string output;
  std::string out_dir;
};

std::string resolve(const Common& c, const std::string& path) {
  if (path.empty() || c.out_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(c.out_dir) / path).string();
}

json producer(const std::string& command, const Common& c) {
  return {{"tool", "minorlab"}, {"command", command}, {"seed", c.seed}};
}

void emit(const Common& c, const json& doc, std::ostream& out) {
  const std::string text = canonical_json(doc);
  if (c.output.empty()) {
    out << text;
  } else {
    write_text_file(resolve(c, c.output), text);
  }
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// "K5", "C4", "K3,3", or a graph file.
Graph pattern_graph(const std::string& name, const std::string& format) {
  auto number = [&](std::size_t from, std::size_t to) {
    const std::string s = name.substr(from, to - from);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return -1;
    return std::stoi(s);
  };
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C')) {
    auto comma = name.find(',');
    if (name[0] == 'K' && comma != std::string::npos) {
      int a = number(1, comma), b = number(comma + 1, name.size());
      if (a > 0 && b > 0) return complete_bipartite(a, b);
    }
    int n = number(1, name.size());
    if (n > 0) return name[0] == 'K' ? complete_graph(n) : cycle_graph(n);
  }
  return read_graph_file(name, format);
}

// ---- ep-solve --------------------------------------------------------------

int cmd_ep_solve(const Common& c, const std::string& graph_path, int p, int k, std::int64_t w, std::ostream& out,
                 std::ostream& err) {
  Graph g = read_graph_file(graph_path, c.format);
  auto d = heuristic_decomposition(g);
  EPOptions opts;
  opts.budget = c.budget;
  opts.w = w;
  auto r = ep_solve(g, d, p, k, opts);
  if (r.budget_exceeded) {
    err << "budget exceeded after " << r.minor_searches << " minor searches\n";
    return kExitLimit;
  }
  json doc = certificate_json(r.certificate);
  doc["producer"] = producer("ep-solve", c);
  doc["producer"]["budget"] = c.budget;
  doc["producer"]["decomposition_width"] = d.width();
  emit(c, doc, out);
  return kExitOk;
}

// ---- minor -----------------------------------------------------------------

int cmd_minor(const Common& c, const std::string& host_path, const std::string& pattern_name, std::ostream& out,
              std::ostream& err) {
  Graph host = read_graph_file(host_path, c.format);
  Graph pattern = pattern_graph(pattern_name, c.format);
  MinorSearchOptions opts;
  opts.budget = c.budget;
  auto r = find_minor(host, pattern, opts);
  if (r.status == MinorStatus::BudgetExceeded) {
    err << "budget exceeded after " << r.nodes << " nodes\n";
    return kExitLimit;
  }
  json doc{{"format", kModelFormat}, {"version", 1}, {"pattern", graph_json(pattern)},
           {"status", status_name(r.status)}, {"producer", producer("minor", c)}};
  if (r.status == MinorStatus::Found) doc["branch_sets"] = model_json(r.model);
  emit(c, doc, out);
  return kExitOk;
}

// ---- gadget ----------------------------------------------------------------

json roles_json(const std::map<Vertex, std::string>& roles) {
  json j = json::object();
  for (const auto& [v, name] : roles) j[std::to_string(v)] = name;
  return j;
}

int cmd_gadget(const Common& c, const std::string& kind, int length, int hubs, int r, int subdivisions, int p, int k,
               std::ostream& out) {
  json doc{{"format", "minorlab-gadget"}, {"version", 1}, {"kind", kind}, {"producer", producer("gadget", c)}};
  if (kind == "ladder") {
    auto l = build_ladder(length);
    doc["parameters"] = {{"length", length}};
    doc["graph"] = graph_json(l.graph);
    doc["roles"] = roles_json(roles(l));
  } else if (kind == "fan") {
    auto f = build_fan(length, hubs);
    doc["parameters"] = {{"length", length}, {"hubs", hubs}};
    doc["graph"] = graph_json(f.graph);
    doc["roles"] = roles_json(roles(f));
  } else if (kind == "wall") {
    auto w = build_wall(r, subdivisions);
    doc["parameters"] = {{"r", r}, {"subdivisions", subdivisions}};
    doc["graph"] = graph_json(w.graph);
    doc["roles"] = roles_json(roles(w));
  } else if (kind == "fan-kp" || kind == "fan-packing") {
    const int copies = kind == "fan-kp" ? 1 : k;
    std::vector<MinorModel> models =
        kind == "fan-kp" ? std::vector<MinorModel>{fan_kp_model(p)} : fan_packing_model(p, copies);
    auto f = build_fan(copies * p, copies * (p - 3));
    doc["parameters"] = {{"p", p}, {"k", copies}};
    doc["graph"] = graph_json(f.graph);
    doc["roles"] = roles_json(roles(f));
    doc["models"] = json::array();
    for (const auto& m : models) doc["models"].push_back(model_json(m));
  } else {
    throw DomainError("unknown gadget kind '" + kind + "' (ladder, fan, wall, fan-kp, fan-packing)");
  }
  emit(c, doc, out);
  return kExitOk;
}

// ---- tight-construct -------------------------------------------------------

EmbeddedGraph base_embedding(const std::string& base) {
  if (base == "torus3") return torus_grid_embedding(3);
  if (base == "torus4") return torus_grid_embedding(4);
  if (base == "double-torus") return double_torus_embedding();
  std::istringstream in(read_text_file(base));
  return read_rotation_system(in);
}

int cmd_tight(const Common& c, const std::string& base, int n, int k, int p, int r, const std::string& graph_out,
              std::ostream& out) {
  TightOptions opts;
  opts.exact_cap = c.exact_cap;
  auto t = build_tight_construction(base_embedding(base), n, k, p, r, opts);
  json doc = tight_certificate_json(t);
  doc["format"] = kTightFormat;
  doc["version"] = 1;
  doc["base"] = base;
  doc["producer"] = producer("tight-construct", c);
  std::string graph_path = graph_out;
  if (graph_path.empty() && !c.out_dir.empty()) graph_path = "tight-construct.edges";
  if (!graph_path.empty()) {
    std::ostringstream edges;
    write_edge_list(edges, t.g);
    write_text_file(resolve(c, graph_path), edges.str());
    doc["graph_file"] = std::filesystem::path(graph_path).filename().string();
  }
  emit(c, doc, out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

std::optional<Violation> verify_model_certificate(const Graph& host, const json& doc, std::uint64_t budget) {
  Graph pattern = graph_from_json(doc.at("pattern"));
  const auto status = doc.at("status").get<std::string>();
  if (status == "found") {
    auto m = model_from_json(doc.at("branch_sets"));
    if (auto v = verify_model(host, pattern, m)) return Violation{v->invariant, v->message};
    return std::nullopt;
  }
  if (status == "absent") {
    MinorSearchOptions opts;
    opts.budget = budget;
    auto r = find_minor(host, pattern, opts);
    if (r.status == MinorStatus::BudgetExceeded) throw SizeLimitError("budget exceeded re-checking absence");
    if (r.status == MinorStatus::Found) return Violation{"absence", "the host contains the pattern as a minor"};
    return std::nullopt;
  }
  throw ParseError("unknown model status '" + status + "'");
}

std::optional<Violation> verify_tight_certificate(const Graph& g, const json& doc, bool check_connectivity) {
  const auto& prm = doc.at("parameters");
  const int k = prm.at("k").get<int>(), p = prm.at("p").get<int>();
  const int d = tight_connectivity(p, k);
  const VertexSet z = vertex_set_from_json(doc.at("apex"));
  const auto disk = doc.at("disk").get<std::vector<Vertex>>();
  if (doc.at("order").get<int>() != g.order()) return Violation{"order", "graph order differs from the certificate"};
  if (static_cast<int>(z.size()) != d || doc.at("apex_count").get<int>() != d)
    return Violation{"apex count", "|Z| = " + std::to_string(z.size()) + ", expected " + std::to_string(d)};
  for (Vertex v : z)
    if (v < 0 || v >= g.order()) return Violation{"apex", "apex vertex out of range"};
  for (Vertex v : disk)
    if (v < 0 || v >= g.order() || z.contains(v)) return Violation{"disk", "disk vertex out of range or an apex"};
  if (disk.size() < 3) return Violation{"disk", "disk boundary has fewer than 3 vertices"};
  VertexSet disk_set(disk);
  if (disk_set.size() != disk.size()) return Violation{"disk", "disk boundary repeats a vertex"};
  for (std::size_t i = 0; i < disk.size(); ++i)
    if (!g.has_edge(disk[i], disk[(i + 1) % disk.size()]))
      return Violation{"disk", "disk boundary is not a cycle of the graph"};
  for (Vertex a : z) {
    for (Vertex v : disk)
      if (!g.has_edge(a, v))
        return Violation{"apex adjacency", "apex " + std::to_string(a) + " misses disk vertex " + std::to_string(v)};
    if (g.degree(a) != static_cast<int>(disk.size()))
      return Violation{"apex adjacency", "apex " + std::to_string(a) + " has neighbours off the disk"};
  }
  const auto& fw = doc.at("face_width");
  if (fw.at("value").get<int>() < prm.at("n").get<int>() + prm.at("r").get<int>())
    return Violation{"face width", "certified face-width is below n + r"};
  if (check_connectivity && !is_k_connected(g, d))
    return Violation{"connectivity", "graph is not " + std::to_string(d) + "-connected"};
  return std::nullopt;
}

int cmd_verify(const Common& c, const std::string& graph_path, const std::string& cert_path, bool check_connectivity,
               std::ostream& out, std::ostream& err) {
  Graph g = read_graph_file(graph_path, c.format);
  json doc = read_json_file(cert_path);
  if (!doc.is_object() || !doc.contains("format")) throw ParseError("certificate has no format field");
  const auto format = doc.at("format").get<std::string>();
  std::optional<Violation> violation;
  try {
    if (format == "minorlab-ep-certificate") {
      auto cert = certificate_from_json(doc);
      if (auto v = verify_certificate(g, cert, c.budget)) violation = Violation{v->check, v->message};
    } else if (format == kModelFormat) {
      violation = verify_model_certificate(g, doc, c.budget);
    } else if (format == kTightFormat) {
      violation = verify_tight_certificate(g, doc, check_connectivity);
    } else {
      throw ParseError("unknown certificate format '" + format + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  json report{{"format", format}, {"valid", !violation}, {"producer", producer("verify", c)}};
  if (violation) report["violation"] = {{"check", violation->check}, {"message", violation->message}};
  emit(c, report, out);
  if (violation) {
    err << "violation: " << violation->check << ": " << violation->message << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ---- linkage-check ---------------------------------------------------------

json cycles_json(const std::vector<Cycle>& cycles) {
  json j = json::array();
  for (const auto& cyc : cycles) j.push_back(cyc);
  return j;
}

int cmd_linkage_check(const Common& c, const std::string& instance_path, int gen_s, int gen_t, int s_prime,
                      std::ostream& out) {
  json inst;
  if (!instance_path.empty()) {
    inst = read_json_file(instance_path);
  } else {
    if (gen_s < 1 || gen_t < 1) throw DomainError("give an instance file or --cylinder-s and --cylinder-t");
    auto cyl = cylinder_instance(gen_s, gen_t, c.seed);
    inst = {{"graph", graph_json(cyl.plane)},
            {"extra", graph_json(cyl.extra)},
            {"cycles", cycles_json(cyl.cycles)},
            {"linkage", linkage_json(cyl.linkage)},
            {"s_prime", s_prime}};
  }
  json report{{"format", "minorlab-linkage-report"}, {"version", 1}, {"producer", producer("linkage-check", c)}};
  try {
    const Graph g = graph_from_json(inst.at("graph"));
    const Linkage l = linkage_from_json(inst.at("linkage"));
    if (auto bad = validate_linkage(g, l)) throw DomainError("invalid linkage: " + *bad);
    report["order"] = l.order();
    report["linkage"] = linkage_json(l);

    if (g.order() <= 10) {
      const bool singular = is_singular(g, l);
      report["singular"] = {{"singular", singular}};
      if (singular) {
        report["singular"]["pathwidth"] = exact_pathwidth(g).width;
        report["singular"]["pathwidth_within_order"] = check_singular_pathwidth(g, l);
      }
    } else {
      report["singular"] = {{"skipped", "more than 10 vertices"}};
    }

    if (inst.contains("h")) {
      const VertexSet h = vertex_set_from_json(inst.at("h"));
      const int t = inst.value("t", 1);
      Comb comb = extract_comb(g, l, h, t);
      auto bad = validate_comb(g, l, comb);
      report["comb"] = {{"comb", comb_json(comb)}, {"valid", !bad}};
      if (bad) report["comb"]["violation"] = *bad;
    }

    if (inst.contains("cycles")) {
      std::vector<Cycle> cycles;
      for (const auto& cyc : inst.at("cycles")) cycles.push_back(cyc.get<Cycle>());
      report["orthogonal"] = is_orthogonal(l, cycles);
      const int sp = inst.value("s_prime", s_prime);
      if (sp > 0) {
        const Graph extra = inst.contains("extra") ? graph_from_json(inst.at("extra")) : Graph(g.order());
        auto res = orthogonalize(g, extra, cycles, l, sp);
        if (res) {
          report["orthogonalized"] = {{"method", res->method},
                                      {"cycles", cycles_json(res->cycles)},
                                      {"linkage", linkage_json(res->linkage)},
                                      {"orthogonal", is_orthogonal(res->linkage, res->cycles)}};
        } else {
          report["orthogonalized"] = nullptr;
        }
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed linkage instance: ") + e.what());
  }
  emit(c, report, out);
  return kExitOk;
}

// ---- facewidth -------------------------------------------------------------

int cmd_facewidth(const Common& c, const std::string& path, std::ostream& out) {
  std::istringstream in(read_text_file(path));
  auto e = read_rotation_system(in);
  FaceWidthOptions opts;
  opts.cap = c.exact_cap;
  auto fw = face_width(e, opts);
  json doc{{"format", "minorlab-face-width"},
           {"version", 1},
           {"order", e.order()},
           {"faces", e.faces().size()},
           {"euler_genus", e.euler_genus()},
           {"producer", producer("facewidth", c)}};
  if (fw.unbounded) {
    doc["face_width"] = "unbounded";
  } else {
    doc["face_width"] = fw.value;
    doc["radial_cycle"] = fw.radial_cycle;
  }
  emit(c, doc, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph minor packing and covering toolkit"};
  app.require_subcommand(1);
  Common c;
  if (const char* dir = std::getenv("MINORLAB_OUT_DIR")) c.out_dir = dir;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Search budget (nodes per minor search)");
    sub->add_option("--exact-cap", c.exact_cap, "Radial-graph node cap for exact face-width");
    sub->add_option("--seed", c.seed, "Seed for generated instances, recorded in output headers");
    sub->add_option("--format", c.format, "Input graph format: auto, edgelist, graph6");
    sub->add_option("-o,--output", c.output, "Write the JSON document here instead of stdout");
    sub->add_option("--out-dir", c.out_dir, "Directory for relative output paths (default $MINORLAB_OUT_DIR)");
  };

  std::string graph_path, cert_path, pattern, kind, base = "torus3", graph_out, instance;
  int p = 0, k = 0, n = 1, r = 5, length = 1, hubs = 0, wall_r = 2, subdivisions = 0, gen_s = 0, gen_t = 0,
      s_prime = 2;
  std::int64_t w = 0;
  bool check_connectivity = false;

  auto* ep = app.add_subcommand("ep-solve", "Packing or hitting-set certificate for K_p minors");
  ep->add_option("graph", graph_path, "Graph file")->required();
  ep->add_option("--p", p)->required();
  ep->add_option("--k", k)->required();
  ep->add_option("--w", w, "Width parameter (default: decomposition width + 1)");
  add_common(ep);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("certificate", cert_path)->required();
  verify->add_flag("--check-connectivity", check_connectivity, "Recheck connectivity of tight constructions");
  add_common(verify);

  auto* minor = app.add_subcommand("minor", "Search for a minor model");
  minor->add_option("host", graph_path)->required();
  minor->add_option("pattern", pattern, "Pattern file or K<n>, C<n>, K<a>,<b>")->required();
  add_common(minor);

  auto* gadget = app.add_subcommand("gadget", "Emit a ladder, fan, wall or fan K_p model");
  gadget->add_option("kind", kind, "ladder, fan, wall, fan-kp, fan-packing")->required();
  gadget->add_option("--length", length);
  gadget->add_option("--hubs", hubs);
  gadget->add_option("--r", wall_r);
  gadget->add_option("--subdivisions", subdivisions);
  gadget->add_option("--p", p);
  gadget->add_option("--k", k);
  add_common(gadget);

  auto* tight = app.add_subcommand("tight-construct", "Build the surface construction G(n,k,p)");
  tight->add_option("--base", base, "torus3, torus4, double-torus, or a rotation-system file");
  tight->add_option("--n", n);
  tight->add_option("--k", k)->required();
  tight->add_option("--p", p)->required();
  tight->add_option("--r", r);
  tight->add_option("--graph-output", graph_out, "Edge-list file for the constructed graph");
  add_common(tight);

  auto* link = app.add_subcommand("linkage-check", "Singularity, comb and orthogonality reports");
  link->add_option("instance", instance, "Instance JSON file");
  link->add_option("--cylinder-s", gen_s, "Generate a cylinder instance with s cycles (uses --seed)");
  link->add_option("--cylinder-t", gen_t, "Paths in the generated cylinder instance");
  link->add_option("--s-prime", s_prime);
  add_common(link);

  auto* fw = app.add_subcommand("facewidth", "Face-width of a rotation system");
  fw->add_option("embedding", graph_path)->required();
  add_common(fw);

  std::vector<std::string> argv_store{"minorlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*ep) return cmd_ep_solve(c, graph_path, p, k, w, out, err);
    if (*verify) return cmd_verify(c, graph_path, cert_path, check_connectivity, out, err);
    if (*minor) return cmd_minor(c, graph_path, pattern, out, err);
    if (*gadget) return cmd_gadget(c, kind, length, hubs, wall_r, subdivisions, p, k, out);
    if (*tight) return cmd_tight(c, base, n, k, p, r, graph_out, out);
    if (*link) return cmd_linkage_check(c, instance, gen_s, gen_t, s_prime, out);
    if (*fw) return cmd_facewidth(c, graph_path, out);
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace minorlab
