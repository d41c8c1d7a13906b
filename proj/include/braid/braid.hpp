#ifndef BRAID_BRAID_HPP
#define BRAID_BRAID_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid/group.hpp"
#include "braid/perm.hpp"

namespace braid {

// Ordered tuple (g_1, ..., g_r) whose left-to-right product is
// declared_product (the identity unless a fixed product was requested).
struct GTuple {
  std::vector<Permutation> entries;
  Permutation declared_product;

  GTuple() = default;
  explicit GTuple(std::vector<Permutation> e);
  GTuple(std::vector<Permutation> e, Permutation product);

  std::size_t size() const { return entries.size(); }
  const Permutation& operator[](std::size_t i) const { return entries[i]; }
  std::size_t degree() const { return declared_product.degree(); }

  friend bool operator==(const GTuple&, const GTuple&) = default;
};

Permutation product(std::span<const Permutation> entries, std::size_t degree);
// True iff the entries multiply to declared_product.
bool product_holds(const GTuple& t);

// Signed generator indices: +i is Q_i, -i is Q_i^-1 (1-based).
struct BraidWord {
  std::vector<int> letters;

  std::string to_string() const;  // "2 1 1 -2"
  static BraidWord parse(std::string_view text);
  BraidWord inverse() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

// Q_i: (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^-1 g_i g_{i+1}).
GTuple apply_q(const GTuple& t, int i);
// Q_i^-1: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i).
GTuple apply_q_inverse(const GTuple& t, int i);
// Letters act in reading order.
GTuple apply_word(const GTuple& t, const BraidWord& w);

// Q_{ij} = Q_{j-1} ... Q_{i+1} Q_i^2 Q_{i+1}^-1 ... Q_{j-1}^-1, 1 <= i < j <= r.
BraidWord pure_generator_word(int i, int j, int r);
// The same element written Q_i^-1 ... Q_{j-2}^-1 Q_{j-1}^2 Q_{j-2} ... Q_i.
BraidWord pure_generator_word_alt(int i, int j, int r);

// Image of a word under Q_i -> (i, i+1) as a permutation of positions
// 0..r-1: entry at position p ends at position image[p].
Permutation position_permutation(const BraidWord& w, int r);

struct ClassSignature {
  std::vector<std::size_t> classes;  // indices into G.classes()
  std::vector<std::string> labels;

  std::size_t size() const { return classes.size(); }
  // Lengths of maximal runs of equal classes.
  std::vector<std::size_t> partition() const;
  bool block_ordered() const;
  std::string to_string() const;  // "(2A,2A,3A)"
  friend bool operator==(const ClassSignature& a, const ClassSignature& b) {
    return a.classes == b.classes;
  }
};

ClassSignature make_signature(const Group& G, std::vector<std::size_t> classes);
ClassSignature signature_of(const GTuple& t, const Group& G);

// Stable insertion sort of the entries by class index, realized by Q moves.
std::pair<GTuple, BraidWord> reorder_to_signature(const GTuple& t, const Group& G);

struct NamedWord {
  std::string name;  // "Q1" or "Q13"
  BraidWord word;
};

// Q_i with i, i+1 in one block, then Q_ij for i, j in different blocks in
// lexicographic order.
std::vector<NamedWord> bp_generators(const std::vector<std::size_t>& partition);
std::vector<NamedWord> pure_generators(int r);

struct Coalesced {
  GTuple tuple;
  bool admissible = true;  // false when the merged entry is the identity
};

// Replaces the last two entries by their product.
Coalesced coalesce(const GTuple& t);

}  // namespace braid

#endif
