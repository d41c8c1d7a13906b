#ifndef BRAID_PROJECT_HPP
#define BRAID_PROJECT_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braid/hurwitz.hpp"
#include "braid/orbit.hpp"

namespace braid {

// Text form of one orbit: header lines, one representative per line (entry
// image lists joined by ';'), then the induced permutation of every recorded
// generator in cycle notation on 1..length.
std::string format_orbit(const OrbitRecord& rec, const Group& G);
OrbitRecord parse_orbit(const std::string& text, const Group& G);
OrbitRecord read_orbit_file(const std::filesystem::path& path, const Group& G);

// Writes to a temporary name first, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

// Removes the directory's previous contents and recreates it.
void reset_project_dir(const std::filesystem::path& dir);

struct OrbitGenera {
  std::size_t orbit = 0;  // 0-based index into the run
  std::vector<CurveGenusReport> curve;     // inner or normalizer
  std::vector<CurveGenusReport> straight;  // one per pure suborbit
};

// Genera of every generating orbit of a length-4 run; empty otherwise.
std::vector<OrbitGenera> generating_genera(const RunResult& run, const Group& equivalence,
                                           CurveVariant variant);

struct RunInfo {
  std::string group;
  std::string equivalence = "inner";
  std::string mode = "exact";
  std::uint64_t seed = 1;
};

std::string format_summary(const RunResult& run, const ClassSignature& sig, const RunInfo& info,
                           const std::vector<OrbitGenera>& genera);

// ORBIT_1.. and SUMMARY in dir (which must exist).
void write_run(const std::filesystem::path& dir, const RunResult& run, const Group& G,
               const ClassSignature& sig, const RunInfo& info,
               const std::vector<OrbitGenera>& genera);

// One row per signature with generating tuples, in the layout of the
// genus-zero tables: orbit lengths are those of the pure braid suborbits of
// the generating orbits (equal to the orbits themselves when the pure braid
// group is transitive on them).
struct CensusRow {
  ClassSignature signature;
  std::vector<std::size_t> lengths;
  std::vector<long> genus;
  std::vector<long> straight_genus;
  BigInt structure_constant;
  bool complete = false;
  RunResult run;
  std::vector<OrbitGenera> genera;
};

struct CensusOptions {
  std::size_t r_max = 6;
  OrbitOptions orbit;  // orbit.equivalence selects the normalizer curve
  std::function<void(const ClassSignature&, const CensusRow*)> on_signature;
};

std::vector<CensusRow> run_census(const Group& G, const CensusOptions& options);
CensusRow census_row(const ClassSignature& sig, RunResult run,
                     const Group& equivalence, CurveVariant variant);

std::string format_census_table(const std::vector<CensusRow>& rows);
nlohmann::json census_json(const Group& G, const std::vector<CensusRow>& rows);

}  // namespace braid

#endif
