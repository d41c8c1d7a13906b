#ifndef BRAID_GROUP_HPP
#define BRAID_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "braid/perm.hpp"

namespace braid {

using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

// Uniform draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. Level i stores the orbit of base point i under the pointwise
// stabilizer of base points 0..i-1 together with explicit coset
// representatives.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> index into orbit, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
    // Orbit labels of <generators> on all points; used for search pruning.
    std::vector<std::uint32_t> orbit_id;
  };

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                  const std::vector<Point>& base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  const std::vector<Point>& base() const { return base_; }
  const BigInt& order() const { return order_; }

  // Strips g through the chain; returns the residue and the level at which
  // sifting stopped (depth() when it went all the way through).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;
  Permutation random_element(Rng& rng) const;

  // Visits every element exactly once, in chain order.
  template <typename F>
  void for_each_element(F&& visit) const {
    Permutation id(degree_);
    walk(0, id, visit);
  }

 private:
  template <typename F>
  void walk(std::size_t i, const Permutation& prefix, F& visit) const {
    if (i == levels_.size()) {
      visit(prefix);
      return;
    }
    for (const auto& u : levels_[i].transversal) walk(i + 1, u * prefix, visit);
  }

  void build(const std::vector<Permutation>& generators,
             const std::vector<Point>& base_prefix);
  void rebuild_level(std::size_t i);

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

struct Subgroup {
  std::vector<Permutation> generators;
  BigInt order;
};

// Backtrack search over the chain for c in G with s[m]^c = t[m] for all m.
std::optional<Permutation> find_conjugator(const StabilizerChain& chain,
                                           std::span<const Permutation> s,
                                           std::span<const Permutation> t);

// Simultaneous centralizer of s in G, level by level: the returned
// generators form a strong generating set relative to the chain's base.
Subgroup centralizer(const StabilizerChain& chain, std::span<const Permutation> s);

struct ConjClass {
  std::string label;
  Permutation representative;
  BigInt size;
  std::uint64_t element_order = 1;
  std::vector<std::size_t> cycle_type;
  std::size_t index = 0;  // degree minus number of cycles
  std::vector<Permutation> centralizer_generators;
  BigInt centralizer_order;
  std::size_t inverse_class = 0;
};

struct GroupOptions {
  // Upper bound on |G| for class computation.
  BigInt class_bound = BigInt(1000000000);
  // Upper bound on |G| for full element listing (class fallback, oracles).
  BigInt listing_bound = BigInt(10000000);
  // Largest class that is enumerated to break labelling ties.
  std::uint64_t tie_enumeration_bound = 2000000;
  std::uint64_t class_seed = 0x5eed;
};

class Group {
 public:
  Group() = default;
  Group(std::size_t degree, std::vector<Permutation> generators,
        std::string name = {}, GroupOptions options = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return chain_.degree(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return chain_.order(); }
  const StabilizerChain& chain() const { return chain_; }
  const GroupOptions& options() const { return options_; }

  bool contains(const Permutation& g) const { return chain_.contains(g); }
  Permutation identity() const { return Permutation(degree()); }
  Permutation random_element(Rng& rng) const { return chain_.random_element(rng); }

  // Classes labelled by element order, then descending class size, then
  // power map, then the smallest image array among the class elements.
  const std::vector<ConjClass>& classes() const;
  // Index into classes(); throws InputError for elements outside G.
  std::size_t class_of(const Permutation& g) const;
  std::optional<std::size_t> class_by_label(const std::string& label) const;
  // All elements of class k (conjugation orbit of the representative).
  std::vector<Permutation> class_elements(std::size_t k) const;

  std::optional<Permutation> transporter(const Permutation& g,
                                         const Permutation& h) const;
  std::optional<Permutation> tuple_conjugator(std::span<const Permutation> s,
                                              std::span<const Permutation> t) const;
  Subgroup centralizer(std::span<const Permutation> s) const;
  BigInt center_order() const;

  bool is_transitive() const;
  // Nontrivial block system with the smallest blocks, or nullopt when the
  // group is primitive. Requires a transitive group.
  std::optional<std::vector<std::vector<Point>>> minimal_blocks() const;

  std::vector<Permutation> elements() const;

 private:
  void require_member(const Permutation& g) const;

  std::string name_;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
  GroupOptions options_;
  struct ClassCache;
  std::shared_ptr<ClassCache> cache_;
};

// Group generated by the given permutations (order via Schreier-Sims).
BigInt generated_order(std::size_t degree, std::span<const Permutation> gens);
bool is_transitive(std::size_t degree, std::span<const Permutation> gens);
std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens);

struct CosetAction {
  Group group;  // action on the right cosets of U
  std::vector<Permutation> generator_images;
  std::vector<Permutation> coset_representatives;
  // Image of an element of the original group.
  Permutation map(const Permutation& g) const;

  std::shared_ptr<const StabilizerChain> subgroup_chain;
};

// Right-coset action of G on U\G. Throws InputError when U is not a
// subgroup of G or when the action is not faithful.
CosetAction coset_action(const Group& G, const std::vector<Permutation>& U_generators,
                         std::uint64_t max_index = 100000);

// N_{S_n}(G) by exhaustive search over S_n; degree must be <= max_degree.
Group normalizer_in_sym(const Group& G, std::size_t max_degree = 8);

}  // namespace braid

#endif
