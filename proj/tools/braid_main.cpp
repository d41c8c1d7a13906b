// Command-line front end: braid, braid-coset, census and resume.
#include <csignal>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "braid/count.hpp"
#include "braid/errors.hpp"
#include "braid/hurwitz.hpp"
#include "braid/io.hpp"
#include "braid/project.hpp"

using namespace braid;

namespace {

volatile std::sig_atomic_t interrupted = 0;

void on_sigint(int) { interrupted = 1; }

struct Flags {
  std::string project = "TEMP";
  std::string mode;
  std::uint64_t seed = 1;
  std::string equivalence = "inner";
  std::string normalizer_gens;
  std::size_t r_max = 6;
  std::size_t orbit_cap = 1000000;
  std::size_t batch = 20;
  std::string product;
};

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

CountMode parse_mode(const std::string& m) {
  if (m == "exact") return CountMode::exact;
  if (m == "unlimited") return CountMode::unlimited;
  if (m == "threshold") return CountMode::threshold;
  throw InputError("unknown mode " + m);
}

OrbitOptions orbit_options(const Flags& f, const std::string& default_mode) {
  OrbitOptions o;
  o.mode = parse_mode(f.mode.empty() ? default_mode : f.mode);
  o.seed = f.seed;
  o.orbit_cap = f.orbit_cap;
  if (f.batch == 0) throw InputError("--batch must be positive");
  o.batch = f.batch;
  o.stop = [] { return interrupted != 0; };
  return o;
}

// Entries are permutations in G or class labels; the result lists one
// class index per entry in block order.
std::vector<std::size_t> parse_tuple_classes(const Group& G, const std::string& spec,
                                             const CosetAction* coset = nullptr) {
  std::vector<std::size_t> classes;
  for (const auto& item : split_top_level(spec)) {
    if (item.empty()) throw InputError("empty tuple entry in '" + spec + "'");
    if (item.front() == '(' || item.front() == '[') {
      const std::size_t n = coset ? coset->subgroup_chain->degree() : G.degree();
      Permutation p = parse_permutation(item, n);
      if (coset) p = coset->map(p);
      classes.push_back(G.class_of(p));
    } else {
      auto k = G.class_by_label(item);
      if (!k) throw InputError("unknown class label " + item);
      classes.push_back(*k);
    }
  }
  if (classes.size() < 2) throw InputError("a tuple needs at least two entries");
  std::sort(classes.begin(), classes.end());
  return classes;
}

Group load_normalizer(const Group& G, const std::string& file) {
  if (!file.empty()) {
    Group N = load_group(file);
    if (N.degree() != G.degree()) throw InputError("normalizer degree differs from the group");
    for (const auto& g : G.generators()) {
      if (!N.contains(g)) throw InputError("normalizer does not contain the group");
      for (const auto& n : N.generators()) {
        if (!G.contains(conjugate(g, n))) throw InputError("given group does not normalize G");
      }
    }
    return N;
  }
  if (G.degree() > 8) throw InputError("normalizer unavailable above degree 8; use --normalizer-gens");
  return normalizer_in_sym(G);
}

void print_orbit_block(std::size_t k, const OrbitRecord& o, const std::optional<BigInt>& remaining) {
  std::cout << "\nOrbit " << k << ":\n";
  std::cout << "Length=" << o.length() << "\n";
  std::cout << "Generated subgroup size=" << o.generated_subgroup_order << "\n";
  std::cout << "Centralizer size=" << o.centralizer_order << "\n";
  if (remaining) std::cout << "Remaining portion of structure constant=" << *remaining << "\n";
}

void print_generating_summary(const RunResult& run, const std::vector<OrbitGenera>& genera,
                              CurveVariant variant) {
  std::cout << "\nSummary: orbits of generating tuples\n";
  for (std::size_t i = 0; i < run.orbits.size(); ++i) {
    const auto& o = run.orbits[i];
    if (!o.generates_G) continue;
    std::cout << "\nOrbit of Length " << o.length() << "\n";
    for (const auto& g : genera) {
      if (g.orbit != i) continue;
      for (const auto& r : g.curve) {
        std::cout << (variant == CurveVariant::normalizer ? "Hurwitz curve genus = "
                                                          : "Inner Hurwitz curve genus = ")
                  << r.genus << "\n";
      }
      for (const auto& r : g.straight) {
        std::cout << "Straight inner Hurwitz curve genus = " << r.genus;
        if (g.straight.size() > 1)
          std::cout << " (pure orbit " << r.component + 1 << ", length " << r.F_size << ")";
        std::cout << "\n";
      }
    }
  }
}

int run_braid(const Group& G, const std::vector<std::size_t>& classes, const Flags& f,
              const Group* N) {
  const auto sig = make_signature(G, classes);
  OrbitOptions opt = orbit_options(f, "exact");
  opt.equivalence = N;
  if (!f.product.empty()) opt.product = parse_permutation(f.product, G.degree());
  reset_project_dir(f.project);
  opt.checkpoint = std::filesystem::path(f.project) / "CHECKPOINT";

  std::cout << "Group " << G.name() << ": degree " << G.degree() << ", order " << G.order()
            << "\n";
  std::cout << "Classes " << sig.to_string() << ", partition " << join_sizes(sig.partition())
            << "\n";
  if (opt.mode != CountMode::unlimited)
    std::cout << "Structure constant=" << structure_constant(G, sig, opt.product) << "\n";
  std::size_t shown = 0;
  opt.on_event = [&](const OrbitEvent& e) {
    if (e.kind == OrbitEvent::Kind::batch) {
      std::cout << "Collecting " << e.batch_size << " random tuples... done\n";
    } else {
      print_orbit_block(++shown, *e.orbit, e.remaining);
    }
  };
  std::signal(SIGINT, on_sigint);
  RunResult run = all_braid_orbits(G, sig, opt);

  const CurveVariant variant = N ? CurveVariant::normalizer : CurveVariant::inner;
  const auto genera = generating_genera(run, N ? *N : G, variant);
  RunInfo info{G.name(), N ? "normalizer" : "inner",
               f.mode.empty() ? "exact" : f.mode, f.seed};
  write_run(f.project, run, G, sig, info, genera);
  print_generating_summary(run, genera, variant);
  if (run.interrupted) {
    std::cout << "\nInterrupted; partial results written to " << f.project << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid orbits of generating tuples in permutation groups"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--project", f.project, "Output directory (cleared first)");
    cmd->add_option("--mode", f.mode, "exact, unlimited or threshold");
    cmd->add_option("--seed", f.seed, "Random seed");
    cmd->add_option("--orbit-cap", f.orbit_cap, "Largest orbit before checkpointing");
    cmd->add_option("--batch", f.batch, "Random tuples per batch");
    cmd->add_option("--normalizer-gens", f.normalizer_gens,
                    "Group file generating N_Sn(G) for normalizer equivalence");
  };

  std::string group_file, tuple_spec, subgroup_file, checkpoint_file;
  auto* braid_cmd = app.add_subcommand("braid", "All braid orbits for the classes of a tuple");
  braid_cmd->add_option("group", group_file, "Group file")->required();
  braid_cmd->add_option("tuple", tuple_spec, "Entries: permutations or class labels")->required();
  braid_cmd->add_option("--equivalence", f.equivalence, "inner or normalizer");
  braid_cmd->add_option("--product", f.product, "Fixed product of the tuple entries");
  common(braid_cmd);

  auto* coset_cmd = app.add_subcommand("braid-coset", "As braid, acting on the cosets of U");
  coset_cmd->add_option("group", group_file, "Group file")->required();
  coset_cmd->add_option("tuple", tuple_spec, "Entries: permutations or class labels")->required();
  coset_cmd->add_option("subgroup", subgroup_file, "Generators of a core-free U")->required();
  common(coset_cmd);

  auto* census_cmd = app.add_subcommand("census", "Genus zero signatures and their braid orbits");
  census_cmd->add_option("group", group_file, "Group file")->required();
  census_cmd->add_option("--r-max", f.r_max, "Longest signature");
  common(census_cmd);

  auto* resume_cmd = app.add_subcommand("resume", "Finish an orbit from a checkpoint");
  resume_cmd->add_option("group", group_file, "Group file")->required();
  resume_cmd->add_option("checkpoint", checkpoint_file, "Checkpoint file")->required();
  common(resume_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Group G = load_group(group_file);
    if (braid_cmd->parsed()) {
      std::optional<Group> N;
      if (f.equivalence == "normalizer") {
        N = load_normalizer(G, f.normalizer_gens);
      } else if (f.equivalence != "inner") {
        throw InputError("unknown equivalence " + f.equivalence);
      }
      return run_braid(G, parse_tuple_classes(G, tuple_spec), f, N ? &*N : nullptr);
    }
    if (coset_cmd->parsed()) {
      const auto U = read_group_file(subgroup_file);
      if (U.degree != G.degree()) throw InputError("subgroup degree differs from the group");
      CosetAction ca = coset_action(G, U.generators);
      std::cout << "Coset action of degree " << ca.group.degree() << "\n";
      Group N = load_normalizer(ca.group, f.normalizer_gens);
      return run_braid(ca.group, parse_tuple_classes(ca.group, tuple_spec, &ca), f, &N);
    }
    if (census_cmd->parsed()) {
      std::optional<Group> N;
      if (!f.normalizer_gens.empty()) N = load_normalizer(G, f.normalizer_gens);
      CensusOptions opt;
      opt.r_max = f.r_max;
      opt.orbit = orbit_options(f, "threshold");
      opt.orbit.equivalence = N ? &*N : nullptr;
      reset_project_dir(f.project);
      const bool primitive = G.is_transitive() && !G.minimal_blocks();
      std::cout << "Group " << G.name() << ": degree " << G.degree() << ", order " << G.order()
                << (primitive ? ", primitive" : ", not primitive") << "\n";
      std::size_t k = 0;
      opt.on_signature = [&](const ClassSignature& sig, const CensusRow* row) {
        std::cout << sig.to_string() << ": "
                  << (row ? std::to_string(row->lengths.size()) + " generating orbit(s)"
                          : std::string("no generating tuples"))
                  << "\n";
        if (!row) return;
        const auto dir = std::filesystem::path(f.project) / ("SIG_" + std::to_string(++k));
        std::filesystem::create_directories(dir);
        RunInfo info{G.name(), N ? "normalizer" : "inner",
                     f.mode.empty() ? "threshold" : f.mode, f.seed};
        write_run(dir, row->run, G, sig, info, row->genera);
      };
      std::signal(SIGINT, on_sigint);
      const auto rows = run_census(G, opt);
      const auto table = format_census_table(rows);
      std::cout << "\n" << table;
      write_file_atomic(std::filesystem::path(f.project) / "census.txt", table);
      write_file_atomic(std::filesystem::path(f.project) / "census.json",
                        census_json(G, rows).dump(2) + "\n");
      return interrupted ? 2 : 0;
    }
    if (resume_cmd->parsed()) {
      OrbitOptions opt = orbit_options(f, "exact");
      OrbitRecord rec = resume_orbit(checkpoint_file, G, opt);
      reset_project_dir(f.project);
      write_file_atomic(std::filesystem::path(f.project) / "ORBIT_1", format_orbit(rec, G));
      print_orbit_block(1, rec, std::nullopt);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
