// ksforge: command-line front end for the ray atlas, context hypergraphs,
// two-valued states, forcing gadgets and the MUB fixtures.

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ksforge/atlas.hpp"
#include "ksforge/contexts.hpp"
#include "ksforge/errors.hpp"
#include "ksforge/gadget.hpp"
#include "ksforge/io.hpp"
#include "ksforge/mub.hpp"
#include "ksforge/report.hpp"
#include "ksforge/states.hpp"

namespace {

using nlohmann::json;
using namespace ksf;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;

// "1-9", "1,4,7", "1-3,7".
std::vector<int> parse_seeds(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      const auto dash = part.find('-');
      std::size_t used = 0;
      if (dash == std::string::npos) {
        out.insert(std::stoi(part, &used));
        if (used != part.size()) throw InvalidInput("");
      } else {
        const int a = std::stoi(part.substr(0, dash)), b = std::stoi(part.substr(dash + 1));
        if (a > b) throw InvalidInput("");
        for (int s = a; s <= b; ++s) out.insert(s);
      }
    } catch (const std::exception&) {
      throw InvalidInput("bad seed list \"" + text + "\"");
    }
  }
  for (int s : out) {
    if (s < 1 || s > 9) throw InvalidInput("seeds must lie in 1..9");
  }
  if (out.empty()) throw InvalidInput("empty seed list");
  return {out.begin(), out.end()};
}

json read_json(const std::string& path) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : io::read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      io::write_file(path, text);
    }
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

// Hypergraph from --in (hypergraph JSON, atlas JSON or {"dimension","vectors"}),
// --seeds, or a named fixture.
struct HyperSource {
  std::string in;
  std::string seeds;
  std::string fixture;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in, "hypergraph, atlas or vector-list JSON file ('-' for stdin)");
    cmd->add_option("--seeds", seeds, "build the atlas hypergraph from these seeds, e.g. 1-9");
    cmd->add_option("--fixture", fixture, "built-in hypergraph")
        ->check(CLI::IsMember({"b10", "b13", "peres24", "cabello18", "gadget4"}));
  }

  ContextHypergraph load(std::optional<RayAtlas>* atlas_out = nullptr) const {
    const int given = !in.empty() + !seeds.empty() + !fixture.empty();
    if (given != 1) throw InvalidInput("give exactly one of --in, --seeds, --fixture");
    if (!seeds.empty()) {
      RayAtlas atlas = generate_atlas(parse_seeds(seeds));
      auto h = atlas_hypergraph(atlas);
      if (atlas_out) *atlas_out = std::move(atlas);
      return h;
    }
    if (fixture == "b10") return fixture_b10();
    if (fixture == "b13") return fixture_b13();
    if (fixture == "peres24") return peres24().contexts();
    if (fixture == "cabello18") return cabello18().contexts();
    if (fixture == "gadget4") return build_gadget4(CycloVector{1, 1, 1, 1}).hypergraph();
    const json j = read_json(in);
    if (j.contains("rays")) {
      RayAtlas atlas = io::atlas_from_json(j);
      auto h = atlas_hypergraph(atlas);
      if (atlas_out) *atlas_out = std::move(atlas);
      return h;
    }
    if (j.contains("edges")) return io::hypergraph_from_json(j);
    if (j.contains("vectors") && j["vectors"].is_array()) {
      std::vector<CycloVector> vs;
      for (const auto& v : j["vectors"]) vs.push_back(io::vector_from_json(v));
      if (vs.empty()) throw InvalidInput("empty vector list");
      const int d = j.value("dimension", static_cast<int>(vs.front().dim()));
      return enumerate_contexts(std::span<const CycloVector>(vs), d);
    }
    throw InvalidInput("input is neither a hypergraph, an atlas nor a vector list");
  }
};

ColorPolicy parse_policy(const std::string& p) { return p == "strict" ? ColorPolicy::Strict : ColorPolicy::FirstClaim; }

int run(int argc, char** argv) {
  CLI::App app{"ksforge: exact Kochen-Specker set generator and verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--out", out.path, "write output here instead of stdout");

  std::string seeds = "1-9";
  auto* generate = app.add_subcommand("generate", "ray atlas for the given seeds");
  generate->add_option("--seeds", seeds, "seed indices, e.g. 1-9 or 1,4,7");

  HyperSource bases_src;
  auto* bases = app.add_subcommand("bases", "enumerate contexts (orthogonal bases) as hypergraph JSON");
  bases_src.attach(bases);

  std::string classify_seeds = "1-9", policy = "first_claim";
  auto* classify = app.add_subcommand("classify", "context color census of an atlas");
  classify->add_option("--seeds", classify_seeds, "seed indices");
  classify->add_option("--policy", policy, "ray coloring policy")->check(CLI::IsMember({"first_claim", "strict"}));

  HyperSource states_src;
  bool no_states = false, include_free = false, brute = false;
  int threads = 0;
  auto* states = app.add_subcommand("states", "two-valued states and verdicts");
  states_src.attach(states);
  states->add_flag("--no-states", no_states, "omit the state list");
  states->add_flag("--include-free", include_free, "enumerate vertices in no context as free bits");
  states->add_flag("--brute", brute, "use the exhaustive oracle (at most 25 vertices)");
  states->add_option("--threads", threads, "worker cap (default: KS_FORGE_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);

  HyperSource tifs_src;
  auto* tifs = app.add_subcommand("tifs", "true-implies-false pairs");
  tifs_src.attach(tifs);

  int gadget_dim = 4;
  std::string center;
  auto* gadget = app.add_subcommand("gadget", "forcing gadget for a center vector");
  gadget->add_option("--dim", gadget_dim, "4 or 5")->check(CLI::IsMember({4, 5}));
  gadget->add_option("--center", center, "center vector, JSON array or \"(1,1,1,1)\"");

  auto* peres = app.add_subcommand("peres24", "the 24-ray Peres set as hypergraph JSON");
  auto* cabello = app.add_subcommand("cabello18", "the 18-ray Cabello set as hypergraph JSON");

  int mub_dim = 3;
  auto* mub = app.add_subcommand("mub", "printed MUB family and its verification matrix");
  mub->add_option("--dim", mub_dim, "3 or 4")->check(CLI::IsMember({3, 4}));

  bool timings = false, manifest = false;
  auto* report = app.add_subcommand("report", "run every check; exit 1 if any required check fails");
  report->add_flag("--timings", timings, "include wall-clock timings (output no longer reproducible)");
  report->add_flag("--manifest", manifest, "print the frozen check manifest instead of running it");

  HyperSource export_src;
  std::string format = "json", dot_style = "clique", export_policy = "first_claim";
  auto* exp = app.add_subcommand("export", "hypergraph as JSON or DOT");
  export_src.attach(exp);
  exp->add_option("--format", format, "json or dot");
  exp->add_option("--dot-style", dot_style, "clique or chain")->check(CLI::IsMember({"clique", "chain"}));
  exp->add_option("--policy", export_policy, "ray coloring policy for atlas hypergraphs")
      ->check(CLI::IsMember({"first_claim", "strict"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (*generate) {
    out.emit(io::to_json(generate_atlas(parse_seeds(seeds))));
  } else if (*bases) {
    out.emit(io::to_json(bases_src.load()));
  } else if (*classify) {
    const RayAtlas atlas = generate_atlas(parse_seeds(classify_seeds));
    const auto h = atlas_hypergraph(atlas);
    const auto census = classify_contexts(h, color_map(atlas, parse_policy(policy)));
    json counts = json::object();
    for (const auto& [c, n] : census.counts) counts[std::string(to_string(c))] = n;
    json per_edge = json::array();
    for (std::size_t k = 0; k < h.edges.size(); ++k) {
      per_edge.push_back({{"edge", h.edges[k]}, {"color", std::string(to_string(census.per_edge[k]))}});
    }
    out.emit(json{{"policy", policy}, {"contexts", h.edges.size()}, {"counts", counts}, {"per_edge", per_edge}});
  } else if (*states) {
    const auto h = states_src.load();
    const StateSet s = brute ? brute_states(h, include_free) : enumerate_states(h, {include_free, threads});
    out.emit(io::to_json(s, !no_states));
  } else if (*tifs) {
    const auto r = verdicts(enumerate_states(tifs_src.load()));
    json pairs = json::array();
    for (auto [a, b] : r.tifs) pairs.push_back({a, b});
    out.emit(json{{"count", r.count}, {"tifs", pairs}});
  } else if (*gadget) {
    const CycloVector u = center.empty() ? CycloVector(std::vector<CycloNum>(gadget_dim, CycloNum(1)))
                          : center.front() == '[' ? io::vector_from_json(json::parse(center))
                                                  : parse_vector(center);
    if (static_cast<int>(u.dim()) != gadget_dim) throw InvalidInput("center dimension does not match --dim");
    out.emit(io::to_json(gadget_dim == 4 ? build_gadget4(u) : build_gadget5(u)));
  } else if (*peres || *cabello) {
    const NamedRaySet s = *peres ? peres24() : cabello18();
    auto h = s.contexts();
    h.meta["source"] = *peres ? "peres24" : "cabello18";
    out.emit(io::to_json(h));
  } else if (*mub) {
    const MubFamily f = mub_dim == 3 ? mubs3() : mubs4();
    out.emit(io::to_json(f, verify_family(f)));
  } else if (*report) {
    if (manifest) {
      json m = json::array();
      for (const auto& e : report_manifest()) {
        m.push_back({{"id", e.id},
                     {"criterion", e.criterion},
                     {"description", e.description},
                     {"expected", e.expected},
                     {"provenance", e.provenance},
                     {"informational", e.informational}});
      }
      out.emit(json{{"manifest", kManifestVersion}, {"checks", m}});
      return kOk;
    }
    const ReportCard card = run_report();
    out.emit(card.to_json(timings));
    return card.overall() ? kOk : kVerificationFailed;
  } else if (*exp) {
    std::optional<RayAtlas> atlas;
    const auto h = export_src.load(&atlas);
    if (format == "json") {
      out.emit(io::to_json(h));
    } else if (format == "dot") {
      std::optional<std::vector<ContextColor>> colors;
      if (atlas) colors = classify_contexts(h, color_map(*atlas, parse_policy(export_policy))).per_edge;
      out.emit(io::to_dot(h, dot_style == "chain" ? io::DotStyle::Chain : io::DotStyle::Clique, colors));
    } else {
      throw InvalidInput("unknown export format " + format);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ksf::Error& e) {
    std::cerr << "ksforge: " << ksf::to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ksf::ErrorKind::Internal ? kVerificationFailed : kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ksforge: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "ksforge: error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}
