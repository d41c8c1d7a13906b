#ifndef BRAID_ORBIT_HPP
#define BRAID_ORBIT_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "braid/braid.hpp"
#include "braid/group.hpp"

namespace braid {

// Frozen list of words in the tuple entries. A word is a list of signed
// 1-based positions, taken modulo r, so the schedule fits every length.
struct WordSchedule {
  int version = 0;
  std::vector<std::vector<int>> words;

  static const WordSchedule& standard();
};

using Fingerprint = std::vector<std::uint64_t>;

// Orders of the schedule's words evaluated on the tuple.
Fingerprint fingerprint(const GTuple& t, const WordSchedule& schedule = WordSchedule::standard());
std::uint64_t fingerprint_hash(const Fingerprint& f);

// Canonical form of a tuple under simultaneous conjugation in Sym(n).
// For transitive tuples `conjugators` lists every x with t^x = form; for
// intransitive ones the form is the sorted list of per-orbit forms and no
// conjugators are kept.
struct CanonicalForm {
  std::vector<Point> form;
  bool transitive = false;
  std::vector<Permutation> conjugators;
  std::uint64_t hash = 0;
};

CanonicalForm canonical_form(const GTuple& t);

// Tuples up to simultaneous conjugation by an equivalence group (G itself,
// or an overgroup N of G). Addressed by fingerprint; an exact Sym(n)
// canonical form and an explicit conjugator in the equivalence group confirm
// every match.
class TupleStore {
 public:
  struct Entry {
    GTuple tuple;
    std::uint64_t canonical_hash = 0;
    bool transitive = false;
    Permutation to_canonical;
    std::size_t orbit = 0;
    std::size_t local = 0;
  };
  struct Found {
    std::size_t index = 0;
    bool inserted = false;
  };

  explicit TupleStore(const Group& equivalence,
                      const WordSchedule& schedule = WordSchedule::standard());

  std::optional<std::size_t> find(const GTuple& t) const;
  // Returns the stored equivalent of t, or inserts t with the given tags.
  Found lookup_or_insert(const GTuple& t, std::size_t orbit, std::size_t local);

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(std::size_t i) const { return entries_[i]; }
  const Group& equivalence() const { return *equivalence_; }

 private:
  struct Key {
    std::uint64_t fingerprint;
    CanonicalForm canon;
  };
  Key key_of(const GTuple& t) const;
  std::optional<std::size_t> match(const GTuple& t, const Key& key) const;

  const Group* equivalence_;
  const WordSchedule* schedule_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t,
                     std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>>
      buckets_;
};

struct OrbitRecord {
  ClassSignature signature;
  std::vector<GTuple> representatives;
  std::vector<std::string> generator_names;
  std::vector<Permutation> generator_actions;  // on representative indices
  std::vector<std::string> pure_names;
  std::vector<Permutation> pure_actions;
  BigInt generated_subgroup_order;
  BigInt centralizer_order;  // in the equivalence group
  BigInt tuple_count;        // raw tuples of E(C_1..C_r) in the orbit
  bool generates_G = false;

  std::size_t length() const { return representatives.size(); }
};

// Representative indices of the record split into pure braid orbits, each
// sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> pure_suborbits(const OrbitRecord& rec);

enum class CountMode { exact, unlimited, threshold };

struct OrbitEvent {
  enum class Kind { batch, orbit };
  Kind kind = Kind::batch;
  std::size_t batch_size = 0;      // batch: tuples collected
  std::size_t orbit_index = 0;     // orbit: 0-based index into the result
  const OrbitRecord* orbit = nullptr;
  std::optional<BigInt> remaining;  // unaccounted tuples, when known
};

struct OrbitOptions {
  CountMode mode = CountMode::exact;
  std::size_t batch = 20;
  std::uint64_t subgroup_cutoff = 200;
  std::size_t orbit_cap = 1000000;
  // Tuple lists inside a small subgroup are enumerated completely below
  // this many candidates, otherwise sampled.
  std::uint64_t subgroup_enumeration_limit = 20000;
  std::size_t subgroup_samples = 2000;
  // Unlimited mode stops after this many batches without a new orbit.
  std::size_t idle_batch_limit = 50;
  std::size_t attempts_per_batch = 200000;
  std::uint64_t seed = 1;
  // Equivalence group for the store; nullptr means G (inner mode).
  const Group* equivalence = nullptr;
  // Declared product of every tuple; identity when unset.
  std::optional<Permutation> product;
  std::optional<std::filesystem::path> checkpoint;
  std::function<bool()> stop;
  std::function<void(const OrbitEvent&)> on_event;
};

struct RunResult {
  std::vector<OrbitRecord> orbits;
  std::optional<BigInt> structure_constant;
  std::optional<BigInt> remaining;
  std::size_t batches = 0;
  bool complete = false;  // exact mode reached zero
  bool interrupted = false;
};

// Orbit under the given braid words of the seed, up to the equivalence
// group: representatives in discovery order and the induced permutation
// of each word. Throws ResourceCapError beyond `cap` representatives.
struct Closure {
  std::vector<GTuple> representatives;
  std::vector<Permutation> actions;
};
Closure close_orbit(const GTuple& seed, const std::vector<NamedWord>& words,
                    TupleStore& store, std::size_t orbit_tag, std::size_t cap);

// Order of the subgroup of the equivalence group N that fixes every class
// of the signature (N permutes the classes of G).
BigInt signature_stabilizer_order(const Group& G, const Group& N, const ClassSignature& sig);

// Braid orbit of a block-ordered seed under B_P.
OrbitRecord braid_orbit(const GTuple& seed, const Group& G, const OrbitOptions& options = {});

// Draws entries from C_i by random conjugation and solves for the entry in
// the largest class; nullopt when that entry falls outside its class.
std::optional<GTuple> random_tuple(const Group& G, const ClassSignature& sig, Rng& rng,
                                   const std::optional<Permutation>& product = std::nullopt);

// Tuples of E(C_1..C_r) inside small subgroups generated by known tuples.
std::vector<GTuple> subgroup_assisted_tuples(const Group& G, const ClassSignature& sig,
                                             const std::vector<GTuple>& known, Rng& rng,
                                             const OrbitOptions& options = {});

RunResult all_braid_orbits(const Group& G, const ClassSignature& sig,
                           const OrbitOptions& options = {});

// Checkpoint written when an orbit exceeds the cap; resuming replays the
// closure from the saved representatives.
struct Checkpoint {
  std::string group;
  std::string signature;
  int schedule_version = 0;
  std::string rng_state;
  std::size_t orbit_index = 0;
  std::vector<GTuple> representatives;
};
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::filesystem::path& path, std::size_t degree);
OrbitRecord resume_orbit(const std::filesystem::path& path, const Group& G,
                         const OrbitOptions& options = {});

}  // namespace braid

#endif
