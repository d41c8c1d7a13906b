#ifndef BRAID_COUNT_HPP
#define BRAID_COUNT_HPP

#include <optional>
#include <vector>

#include "braid/braid.hpp"
#include "braid/group.hpp"

namespace braid {

// One nonnegative integer per conjugacy class of G.
using ClassVector = std::vector<BigInt>;

// Entry D: #{(a, b) in A x B : a b = d} for a fixed d in D.
ClassVector class_product_counts(const Group& G, std::size_t A, std::size_t B);

// |{(g_1..g_r) : g_i in C_i, g_1...g_r = z}| with z the identity unless
// given. Computed by folding class products; no characters.
BigInt structure_constant(const Group& G, const std::vector<std::size_t>& classes,
                          const std::optional<Permutation>& product = std::nullopt);
BigInt structure_constant(const Group& G, const ClassSignature& sig,
                          const std::optional<Permutation>& product = std::nullopt);

// |G| / |C_G(t)|: the number of tuples simultaneously conjugate to t.
BigInt inn_orbit_size(const Group& G, const GTuple& t);

}  // namespace braid

#endif
