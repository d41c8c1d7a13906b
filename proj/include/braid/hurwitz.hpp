#ifndef BRAID_HURWITZ_HPP
#define BRAID_HURWITZ_HPP

#include <array>
#include <string>
#include <vector>

#include "braid/braid.hpp"
#include "braid/orbit.hpp"

namespace braid {

// Genus g of the cover with branch cycles t: 2(n + g - 1) = sum Ind(t_i).
// Throws InputError unless t is admissible (nontrivial entries, product 1,
// transitive) and the total is even and nonnegative in g.
long tuple_genus(const GTuple& t);

struct GenusZeroCheck {
  bool genus_zero = false;
  bool primitive = false;
};
// Admissible, transitive and sum Ind = 2(n-1); primitivity of <t> on top.
GenusZeroCheck is_genus_zero_system(const GTuple& t);

// Multisets of nontrivial classes with 3 <= r <= r_max and
// sum Ind = 2(n-1), block ordered; longest signatures first.
std::vector<ClassSignature> genus_zero_signatures(const Group& G, std::size_t r_max);

// Orbit of a 4-tuple under Q1, Q2, Q3, no class order kept.
Closure full_braid_orbit(const GTuple& seed, const Group& equivalence,
                         std::size_t cap = 1000000);

struct VPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
};
// Orbits of <Q1 Q3^-1, (Q1 Q2 Q3)^2> on a full orbit.
VPartition v_orbits(const Closure& full);

enum class CurveVariant { inner, straight, normalizer };
std::string to_string(CurveVariant v);

struct CurveGenusReport {
  CurveVariant variant = CurveVariant::inner;
  std::size_t component = 0;  // pure suborbit for the straight curve
  std::size_t F_size = 0;
  std::array<Permutation, 3> branch_cycles;
  long genus = 0;
};

// Genus of the reduced Hurwitz curve of a length-4 orbit. `equivalence` is
// the group the orbit was computed with (G, or N for the normalizer curve).
// Inner and normalizer: branch cycles Q1Q2, Q1Q2Q1, Q2 on the V-orbits of
// the full orbit. Straight: Q1^2, Q2^2, (Q1^2 Q2^2)^-1 on each pure braid
// suborbit, one report per suborbit.
std::vector<CurveGenusReport> reduced_genus(const OrbitRecord& orbit, const Group& equivalence,
                                            CurveVariant variant,
                                            std::size_t cap = 1000000);

}  // namespace braid

#endif
