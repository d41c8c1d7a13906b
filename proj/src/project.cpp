#include "braid/project.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "braid/count.hpp"
#include "braid/errors.hpp"
#include "braid/io.hpp"

namespace braid {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_entries(const GTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ';';
    out += t[i].to_image_string();
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

// "1680" when all values agree, "2,2,1" otherwise.
template <typename T>
std::string compact(const std::vector<T>& xs) {
  if (xs.empty()) return "";
  if (std::all_of(xs.begin(), xs.end(), [&](const T& x) { return x == xs.front(); })) {
    std::ostringstream out;
    out << xs.front();
    return out.str();
  }
  return join(xs);
}

std::pair<std::string, std::string> split_key(const std::string& line) {
  const auto sp = line.find(' ');
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

}  // namespace

std::string format_orbit(const OrbitRecord& rec, const Group& G) {
  std::ostringstream out;
  out << "group " << G.name() << "\n";
  out << "degree " << G.degree() << "\n";
  out << "signature " << rec.signature.to_string() << "\n";
  const Permutation product =
      rec.representatives.empty() ? G.identity() : rec.representatives.front().declared_product;
  out << "product " << product.to_cycle_string() << "\n";
  out << "length " << rec.length() << "\n";
  out << "tuple_count " << rec.tuple_count << "\n";
  out << "generated_subgroup_order " << rec.generated_subgroup_order << "\n";
  out << "centralizer_order " << rec.centralizer_order << "\n";
  out << "generates_G " << yes_no(rec.generates_G) << "\n";
  out << "representatives\n";
  for (const auto& t : rec.representatives) out << join_entries(t) << "\n";
  out << "actions\n";
  for (std::size_t i = 0; i < rec.generator_names.size(); ++i)
    out << rec.generator_names[i] << " " << rec.generator_actions[i].to_cycle_string() << "\n";
  out << "pure\n";
  for (std::size_t i = 0; i < rec.pure_names.size(); ++i)
    out << rec.pure_names[i] << " " << rec.pure_actions[i].to_cycle_string() << "\n";
  return out.str();
}

OrbitRecord parse_orbit(const std::string& text, const Group& G) {
  std::istringstream in(text);
  std::string line;
  OrbitRecord rec;
  std::size_t length = 0;
  Permutation product = G.identity();
  enum class Section { header, reps, actions, pure } section = Section::header;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "representatives") { section = Section::reps; continue; }
    if (line == "actions") { section = Section::actions; continue; }
    if (line == "pure") { section = Section::pure; continue; }
    if (section == Section::reps) {
      std::vector<Permutation> entries;
      std::istringstream parts(line);
      std::string e;
      while (std::getline(parts, e, ';')) entries.push_back(parse_permutation(e, G.degree()));
      rec.representatives.emplace_back(std::move(entries), product);
      continue;
    }
    auto [key, value] = split_key(line);
    if (section == Section::actions || section == Section::pure) {
      auto p = parse_permutation(value, length);
      auto& names = section == Section::actions ? rec.generator_names : rec.pure_names;
      auto& acts = section == Section::actions ? rec.generator_actions : rec.pure_actions;
      names.push_back(key);
      acts.push_back(std::move(p));
      continue;
    }
    if (key == "group") {
      if (value != G.name()) throw InputError("orbit file is for group " + value);
    } else if (key == "degree") {
      if (std::stoul(value) != G.degree()) throw InputError("orbit file degree mismatch");
    } else if (key == "signature") {
      if (value.size() < 2 || value.front() != '(' || value.back() != ')')
        throw InputError("bad signature line: " + value);
      std::vector<std::size_t> classes;
      for (const auto& l : split_top_level(value.substr(1, value.size() - 2))) {
        auto k = G.class_by_label(l);
        if (!k) throw InputError("unknown class label " + l);
        classes.push_back(*k);
      }
      rec.signature = make_signature(G, classes);
    } else if (key == "product") {
      product = parse_permutation(value, G.degree());
    } else if (key == "length") {
      length = std::stoul(value);
    } else if (key == "tuple_count") {
      rec.tuple_count = BigInt(value);
    } else if (key == "generated_subgroup_order") {
      rec.generated_subgroup_order = BigInt(value);
    } else if (key == "centralizer_order") {
      rec.centralizer_order = BigInt(value);
    } else if (key == "generates_G") {
      rec.generates_G = value == "yes";
    } else {
      throw InputError("unknown orbit file line: " + line);
    }
  }
  if (rec.representatives.size() != length) throw InputError("orbit file length mismatch");
  return rec;
}

OrbitRecord read_orbit_file(const std::filesystem::path& path, const Group& G) {
  return parse_orbit(read_text(path), G);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << text;
    if (!out) throw InputError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void reset_project_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  if (ec) throw InputError("cannot clear " + dir.string() + ": " + ec.message());
  std::filesystem::create_directories(dir);
}

std::vector<OrbitGenera> generating_genera(const RunResult& run, const Group& equivalence,
                                           CurveVariant variant) {
  std::vector<OrbitGenera> out;
  for (std::size_t i = 0; i < run.orbits.size(); ++i) {
    const auto& o = run.orbits[i];
    if (!o.generates_G || o.signature.size() != 4) continue;
    out.push_back({i, reduced_genus(o, equivalence, variant),
                   reduced_genus(o, equivalence, CurveVariant::straight)});
  }
  return out;
}

std::string format_summary(const RunResult& run, const ClassSignature& sig, const RunInfo& info,
                           const std::vector<OrbitGenera>& genera) {
  std::ostringstream out;
  out << "group " << info.group << "\n";
  out << "signature " << sig.to_string() << "\n";
  out << "equivalence " << info.equivalence << "\n";
  out << "mode " << info.mode << "\n";
  out << "seed " << info.seed << "\n";
  out << "structure_constant "
      << (run.structure_constant ? run.structure_constant->str() : std::string("unknown")) << "\n";
  BigInt accounted = 0;
  for (const auto& o : run.orbits) accounted += o.tuple_count;
  out << "accounted " << accounted << "\n";
  out << "remaining " << (run.remaining ? run.remaining->str() : std::string("unknown")) << "\n";
  out << "batches " << run.batches << "\n";
  out << "complete " << yes_no(run.complete) << "\n";
  out << "interrupted " << yes_no(run.interrupted) << "\n";
  out << "orbits " << run.orbits.size() << "\n";
  for (std::size_t i = 0; i < run.orbits.size(); ++i) {
    const auto& o = run.orbits[i];
    out << "orbit " << i + 1 << " length " << o.length() << " subgroup "
        << o.generated_subgroup_order << " centralizer " << o.centralizer_order << " tuples "
        << o.tuple_count << " generating " << yes_no(o.generates_G) << "\n";
  }
  for (const auto& g : genera) {
    for (const auto& r : g.curve)
      out << "genus orbit " << g.orbit + 1 << " " << to_string(r.variant) << " F " << r.F_size
          << " genus " << r.genus << "\n";
    for (const auto& r : g.straight)
      out << "genus orbit " << g.orbit + 1 << " straight component " << r.component + 1
          << " F " << r.F_size << " genus " << r.genus << "\n";
  }
  return out.str();
}

void write_run(const std::filesystem::path& dir, const RunResult& run, const Group& G,
               const ClassSignature& sig, const RunInfo& info,
               const std::vector<OrbitGenera>& genera) {
  for (std::size_t i = 0; i < run.orbits.size(); ++i) {
    write_file_atomic(dir / ("ORBIT_" + std::to_string(i + 1)), format_orbit(run.orbits[i], G));
  }
  write_file_atomic(dir / "SUMMARY", format_summary(run, sig, info, genera));
}

CensusRow census_row(const ClassSignature& sig, RunResult run,
                     const Group& equivalence, CurveVariant variant) {
  CensusRow row;
  row.signature = sig;
  row.structure_constant = run.structure_constant.value_or(BigInt(0));
  row.complete = run.complete;
  for (const auto& o : run.orbits) {
    if (!o.generates_G) continue;
    for (const auto& p : pure_suborbits(o)) row.lengths.push_back(p.size());
  }
  row.genera = generating_genera(run, equivalence, variant);
  for (const auto& g : row.genera) {
    for (const auto& r : g.curve) row.genus.push_back(r.genus);
    for (const auto& r : g.straight) row.straight_genus.push_back(r.genus);
  }
  row.run = std::move(run);
  return row;
}

std::vector<CensusRow> run_census(const Group& G, const CensusOptions& options) {
  const Group& E = options.orbit.equivalence ? *options.orbit.equivalence : G;
  const CurveVariant variant =
      options.orbit.equivalence ? CurveVariant::normalizer : CurveVariant::inner;
  std::vector<CensusRow> rows;
  for (const auto& sig : genus_zero_signatures(G, options.r_max)) {
    auto run = all_braid_orbits(G, sig, options.orbit);
    const bool any = std::any_of(run.orbits.begin(), run.orbits.end(),
                                 [](const OrbitRecord& o) { return o.generates_G; });
    if (!any) {
      if (options.on_signature) options.on_signature(sig, nullptr);
      continue;
    }
    rows.push_back(census_row(sig, std::move(run), E, variant));
    if (options.on_signature) options.on_signature(sig, &rows.back());
  }
  return rows;
}

std::string format_census_table(const std::vector<CensusRow>& rows) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"classes", "length of orbits", "number of orbits", "genus", "straight genus"});
  for (const auto& r : rows) {
    cells.push_back({r.signature.to_string(), compact(r.lengths), std::to_string(r.lengths.size()),
                     compact(r.genus), compact(r.straight_genus)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& c : cells)
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
  std::ostringstream out;
  for (const auto& c : cells) {
    std::string line;
    for (std::size_t i = 0; i < 5; ++i) {
      line += c[i];
      if (i + 1 < 5) line += std::string(width[i] - c[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

nlohmann::json census_json(const Group& G, const std::vector<CensusRow>& rows) {
  nlohmann::json j;
  j["group"] = G.name();
  j["degree"] = G.degree();
  j["order"] = G.order().str();
  j["primitive"] = G.is_transitive() && !G.minimal_blocks().has_value();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["signature"] = r.signature.to_string();
    row["classes"] = r.signature.labels;
    row["orbit_lengths"] = r.lengths;
    row["orbit_count"] = r.lengths.size();
    row["genus"] = r.genus;
    row["straight_genus"] = r.straight_genus;
    row["structure_constant"] = r.structure_constant.str();
    row["complete"] = r.complete;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

}  // namespace braid
