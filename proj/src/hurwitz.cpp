#include "braid/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {

std::size_t total_index(std::span<const Permutation> cycles) {
  std::size_t sum = 0;
  for (const auto& c : cycles) sum += index(c);
  return sum;
}

std::string dump(const std::array<Permutation, 3>& cycles) {
  std::ostringstream out;
  for (const auto& c : cycles) out << " " << c.to_cycle_string();
  return out.str();
}

long curve_genus(const std::array<Permutation, 3>& cycles) {
  const long n = static_cast<long>(cycles[0].degree());
  const std::size_t total = total_index(cycles);
  if (total % 2 != 0) throw InvariantError("odd branch-cycle index sum:" + dump(cycles));
  const long g = static_cast<long>(total / 2) - n + 1;
  if (g < 0) throw InvariantError("negative curve genus:" + dump(cycles));
  if (!is_transitive(cycles[0].degree(), cycles))
    throw InvariantError("branch cycles not transitive:" + dump(cycles));
  return g;
}

// Action of p on the blocks of a partition; InvariantError if p does not
// permute the blocks.
Permutation induced(const Permutation& p, const VPartition& part) {
  std::vector<Point> im(part.blocks.size());
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const auto target = part.block_of[p[part.blocks[b].front()]];
    for (auto x : part.blocks[b]) {
      if (part.block_of[p[x]] != target) throw InvariantError("action does not respect V-orbits");
    }
    im[b] = static_cast<Point>(target);
  }
  return Permutation::from_images(std::move(im));
}

// Restriction of p to an invariant, sorted subset.
Permutation restricted(const Permutation& p, const std::vector<std::size_t>& subset) {
  std::vector<Point> im(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto it = std::lower_bound(subset.begin(), subset.end(), p[subset[i]]);
    if (it == subset.end() || *it != p[subset[i]]) throw InvariantError("subset not invariant");
    im[i] = static_cast<Point>(it - subset.begin());
  }
  return Permutation::from_images(std::move(im));
}

void require_admissible(const GTuple& t) {
  if (t.size() == 0) throw InputError("empty tuple");
  const std::size_t n = t[0].degree();
  for (const auto& g : t.entries) {
    if (g.degree() != n) throw InputError("tuple entries of different degree");
    if (g.is_identity()) throw InputError("tuple has an identity entry");
  }
  if (!product(t.entries, n).is_identity()) throw InputError("tuple product is not 1");
}

}  // namespace

long tuple_genus(const GTuple& t) {
  require_admissible(t);
  const std::size_t n = t[0].degree();
  if (!is_transitive(n, t.entries)) throw InputError("tuple generates an intransitive group");
  const std::size_t total = total_index(t.entries);
  if (total % 2 != 0) throw InputError("odd index sum " + std::to_string(total));
  const long g = static_cast<long>(total / 2) - static_cast<long>(n) + 1;
  if (g < 0) throw InputError("negative genus from index sum " + std::to_string(total));
  return g;
}

GenusZeroCheck is_genus_zero_system(const GTuple& t) {
  GenusZeroCheck out;
  if (t.size() == 0) return out;
  const std::size_t n = t[0].degree();
  for (const auto& g : t.entries) {
    if (g.degree() != n || g.is_identity()) return out;
  }
  if (!product(t.entries, n).is_identity()) return out;
  if (!is_transitive(n, t.entries)) return out;
  if (total_index(t.entries) != 2 * (n - 1)) return out;
  out.genus_zero = true;
  Group H(n, t.entries);
  out.primitive = !H.minimal_blocks().has_value();
  return out;
}

std::vector<ClassSignature> genus_zero_signatures(const Group& G, std::size_t r_max) {
  const auto& cls = G.classes();
  const std::size_t target = 2 * (G.degree() - 1);
  std::vector<std::size_t> nontrivial;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (cls[k].element_order > 1) nontrivial.push_back(k);
  }
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t sum) {
    if (sum == target && current.size() >= 3) found.push_back(current);
    if (current.size() == r_max) return;
    for (std::size_t p = from; p < nontrivial.size(); ++p) {
      const std::size_t ind = cls[nontrivial[p]].index;
      if (sum + ind > target) continue;
      current.push_back(nontrivial[p]);
      extend(p, sum + ind);
      current.pop_back();
    }
  };
  extend(0, 0);
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<ClassSignature> out;
  for (auto& f : found) out.push_back(make_signature(G, std::move(f)));
  return out;
}

Closure full_braid_orbit(const GTuple& seed, const Group& equivalence, std::size_t cap) {
  if (seed.size() != 4) throw InputError("full braid orbit needs a 4-tuple");
  std::vector<NamedWord> words;
  for (int i = 1; i <= 3; ++i) words.push_back({"Q" + std::to_string(i), BraidWord{{i}}});
  TupleStore store(equivalence);
  return close_orbit(seed, words, store, 0, cap);
}

VPartition v_orbits(const Closure& full) {
  if (full.actions.size() != 3) throw InputError("v_orbits needs the actions of Q1, Q2, Q3");
  const auto& a = full.actions;
  const Permutation q123 = a[0] * a[1] * a[2];
  const std::vector<Permutation> gens{a[0] * a[2].inverse(), q123 * q123};
  VPartition out;
  const std::size_t n = full.representatives.size();
  out.block_of.assign(n, 0);
  for (auto& o : orbits(n, gens)) {
    std::vector<std::size_t> b(o.begin(), o.end());
    std::sort(b.begin(), b.end());
    for (auto x : b) out.block_of[x] = out.blocks.size();
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (auto x : out.blocks[i]) out.block_of[x] = i;
  }
  for (const auto& g : gens) {
    if (!induced(g, out).is_identity()) throw InvariantError("V acts nontrivially on its orbits");
  }
  return out;
}

std::string to_string(CurveVariant v) {
  switch (v) {
    case CurveVariant::inner: return "inner";
    case CurveVariant::straight: return "straight";
    case CurveVariant::normalizer: return "normalizer";
  }
  return "?";
}

std::vector<CurveGenusReport> reduced_genus(const OrbitRecord& orbit, const Group& equivalence,
                                            CurveVariant variant, std::size_t cap) {
  if (orbit.signature.size() != 4 || orbit.representatives.empty())
    throw InputError("reduced genus needs an orbit of 4-tuples");
  std::vector<CurveGenusReport> out;

  if (variant == CurveVariant::straight) {
    auto action = [&](const std::string& name) {
      auto it = std::find(orbit.pure_names.begin(), orbit.pure_names.end(), name);
      if (it == orbit.pure_names.end()) throw InputError("orbit lacks pure action " + name);
      return orbit.pure_actions[it - orbit.pure_names.begin()];
    };
    const Permutation p1 = action("Q1,2");
    const Permutation p2 = action("Q2,3");
    const Permutation pinf = (p1 * p2).inverse();
    const auto parts = pure_suborbits(orbit);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      CurveGenusReport r;
      r.variant = variant;
      r.component = c;
      r.F_size = parts[c].size();
      r.branch_cycles = {restricted(p1, parts[c]), restricted(p2, parts[c]),
                         restricted(pinf, parts[c])};
      r.genus = curve_genus(r.branch_cycles);
      out.push_back(std::move(r));
    }
    return out;
  }

  const Closure full = full_braid_orbit(orbit.representatives.front(), equivalence, cap);
  const VPartition F = v_orbits(full);
  const auto& a = full.actions;
  CurveGenusReport r;
  r.variant = variant;
  r.F_size = F.blocks.size();
  r.branch_cycles = {induced(a[0] * a[1], F), induced(a[0] * a[1] * a[0], F), induced(a[1], F)};
  if (!r.branch_cycles[0].pow(3).is_identity() || !r.branch_cycles[1].pow(2).is_identity())
    throw InvariantError("gamma_0^3 or gamma_1^2 is not 1 on F:" + dump(r.branch_cycles));
  r.genus = curve_genus(r.branch_cycles);
  out.push_back(std::move(r));
  return out;
}

}  // namespace braid
