#include "braid/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "braid/errors.hpp"

namespace braid {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// ---------------------------------------------------------------------------
// Stabilizer chain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 const std::vector<Permutation>& generators,
                                 const std::vector<Point>& base_prefix)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
    }
  }
  build(generators, base_prefix);
}

void StabilizerChain::rebuild_level(std::size_t i) {
  Level& L = levels_[i];
  L.orbit.assign(1, L.base_point);
  L.position.assign(degree_, -1);
  L.position[L.base_point] = 0;
  L.transversal.assign(1, Permutation(degree_));
  L.transversal_inv.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    const Point x = L.orbit[k];
    for (const auto& s : L.generators) {
      const Point y = s[x];
      if (L.position[y] >= 0) continue;
      L.position[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      Permutation u = L.transversal[k] * s;
      L.transversal_inv.push_back(u.inverse());
      L.transversal.push_back(std::move(u));
    }
  }
  // Orbits of the level's group on every point.
  L.orbit_id.assign(degree_, 0);
  std::vector<Point> parent(degree_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : L.generators) {
    for (Point x = 0; x < degree_; ++x) {
      Point a = find(x), b = find(s[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (Point x = 0; x < degree_; ++x) L.orbit_id[x] = find(x);
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g) const {
  Permutation h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    const std::int32_t pos = L.position[h[L.base_point]];
    if (pos < 0) return {h, i};
    h = h * L.transversal_inv[pos];
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

Permutation StabilizerChain::random_element(Rng& rng) const {
  Permutation g(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    g = L.transversal[uniform_below(rng, L.transversal.size())] * g;
  }
  return g;
}

void StabilizerChain::build(const std::vector<Permutation>& generators,
                            const std::vector<Point>& base_prefix) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (!g.is_identity()) gens.push_back(g);
  }
  base_ = base_prefix;
  for (const auto& g : gens) {
    bool moves_base = std::any_of(base_.begin(), base_.end(),
                                  [&](Point b) { return g[b] != b; });
    if (!moves_base) {
      for (Point x = 0; x < degree_; ++x) {
        if (g[x] != x) {
          base_.push_back(x);
          break;
        }
      }
    }
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].base_point = base_[i];
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (g[base_[j]] != base_[j]) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_level(i);
  }

  auto sift_from = [&](Permutation h, std::size_t start) {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& L = levels_[i];
      const std::int32_t pos = L.position[h[L.base_point]];
      if (pos < 0) return std::pair{h, i};
      h = h * L.transversal_inv[pos];
    }
    return std::pair{h, levels_.size()};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& L = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < L.orbit.size() && !extended; ++k) {
      for (std::size_t gi = 0; gi < L.generators.size() && !extended; ++gi) {
        const Permutation& s = L.generators[gi];
        const Point y = s[L.orbit[k]];
        const Permutation h =
            L.transversal[k] * s * L.transversal_inv[L.position[y]];
        if (h.is_identity()) continue;
        auto [res, j] = sift_from(h, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && res.is_identity()) continue;
        if (j == levels_.size()) {
          Point moved = 0;
          while (res[moved] == moved) ++moved;
          base_.push_back(moved);
          levels_.push_back(Level{});
          levels_.back().base_point = moved;
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(res);
          rebuild_level(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& L : levels_) order_ *= L.orbit.size();
}

// ---------------------------------------------------------------------------
// Backtrack search

namespace {

constexpr Point kUnset = static_cast<Point>(-1);

// Depth-first search for elements c of the chain's group with
// s[m] * c == c * t[m]. Images of whole <s>-orbits are forced as soon as one
// point is mapped, and every forced image is checked against the orbits of
// the remaining stabilizer.
class ConjugatorSearch {
 public:
  ConjugatorSearch(const StabilizerChain& chain, std::span<const Permutation> s,
                   std::span<const Permutation> t)
      : chain_(chain), n_(chain.degree()), s_(s.begin(), s.end()), t_(t.begin(), t.end()) {
    for (const auto& p : s_) s_inv_.push_back(p.inverse());
    for (const auto& p : t_) t_inv_.push_back(p.inverse());
    s_orbit_size_ = orbit_sizes(s_);
    t_orbit_size_ = orbit_sizes(t_);
    phi_.assign(n_, kUnset);
    phi_inv_.assign(n_, kUnset);
  }

  bool compatible() const {
    if (s_.size() != t_.size()) return false;
    for (std::size_t m = 0; m < s_.size(); ++m) {
      if (s_[m].degree() != n_ || t_[m].degree() != n_) return false;
      if (s_[m].cycle_type() != t_[m].cycle_type()) return false;
    }
    std::vector<std::size_t> a(s_orbit_size_), b(t_orbit_size_);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Finds one element whose base images start with `prescribed`.
  std::optional<Permutation> find(const std::vector<Point>& prescribed) {
    prescribed_ = prescribed;
    std::fill(phi_.begin(), phi_.end(), kUnset);
    std::fill(phi_inv_.begin(), phi_inv_.end(), kUnset);
    trail_.clear();
    result_.reset();
    Permutation id(n_);
    dfs(0, id, id);
    return result_;
  }

 private:
  static std::vector<std::size_t> orbit_sizes(const std::vector<Permutation>& gens) {
    const std::size_t n = gens.empty() ? 0 : gens[0].degree();
    std::vector<std::size_t> size(n, 0);
    std::vector<Point> queue;
    std::vector<char> seen(n, 0);
    for (Point x = 0; x < n; ++x) {
      if (seen[x]) continue;
      queue.assign(1, x);
      seen[x] = 1;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto& g : gens) {
          Point y = g[queue[k]];
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
      for (Point y : queue) size[y] = queue.size();
    }
    return size;
  }

  bool assign(Point x, Point y) {
    if (phi_[x] == y) return true;
    if (phi_[x] != kUnset || phi_inv_[y] != kUnset) return false;
    if (!s_orbit_size_.empty() && s_orbit_size_[x] != t_orbit_size_[y]) return false;
    phi_[x] = y;
    phi_inv_[y] = x;
    trail_.push_back(x);
    pending_.push_back(x);
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      Point x = pending_.back();
      pending_.pop_back();
      Point y = phi_[x];
      for (std::size_t m = 0; m < s_.size(); ++m) {
        if (!assign(s_[m][x], t_[m][y]) || !assign(s_inv_[m][x], t_inv_[m][y])) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      phi_inv_[phi_[x]] = kUnset;
      phi_[x] = kUnset;
    }
  }

  // Every assigned point must still be reachable: with c = h * prod and h in
  // the stabilizer of the first `level` base points, x^h = phi(x)^{prod^-1}.
  bool feasible(std::size_t level, const Permutation& prod_inv) const {
    if (level == chain_.depth()) {
      for (Point x : trail_) {
        if (prod_inv[phi_[x]] != x) return false;
      }
      return true;
    }
    const auto& ids = chain_.level(level).orbit_id;
    for (Point x : trail_) {
      if (ids[x] != ids[prod_inv[phi_[x]]]) return false;
    }
    return true;
  }

  void dfs(std::size_t level, const Permutation& prod, const Permutation& prod_inv) {
    if (result_) return;
    if (level == chain_.depth()) {
      for (std::size_t m = 0; m < s_.size(); ++m) {
        if (s_[m] * prod != prod * t_[m]) return;
      }
      result_ = prod;
      return;
    }
    const auto& L = chain_.level(level);
    const Point beta = L.base_point;

    auto try_image = [&](Point gamma) {
      const Point a = prod_inv[gamma];
      const std::int32_t pos = L.position[a];
      if (pos < 0) return;
      const std::size_t mark = trail_.size();
      if (!assign(beta, gamma) || !propagate()) {
        undo(mark);
        return;
      }
      Permutation next = L.transversal[pos] * prod;
      Permutation next_inv = prod_inv * L.transversal_inv[pos];
      if (feasible(level + 1, next_inv)) dfs(level + 1, next, next_inv);
      undo(mark);
    };

    if (level < prescribed_.size()) {
      try_image(prescribed_[level]);
      return;
    }
    if (phi_[beta] != kUnset) {
      try_image(phi_[beta]);
      return;
    }
    for (Point a : L.orbit) {
      if (result_) return;
      const Point gamma = prod[a];
      if (phi_inv_[gamma] != kUnset) continue;
      try_image(gamma);
    }
  }

  const StabilizerChain& chain_;
  std::size_t n_;
  std::vector<Permutation> s_, t_, s_inv_, t_inv_;
  std::vector<std::size_t> s_orbit_size_, t_orbit_size_;
  std::vector<Point> phi_, phi_inv_, trail_, pending_, prescribed_;
  std::optional<Permutation> result_;
};

std::vector<Point> orbit_of(Point start, std::span<const Permutation> gens,
                            std::size_t degree) {
  std::vector<Point> orbit{start};
  std::vector<char> seen(degree, 0);
  seen[start] = 1;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& g : gens) {
      Point y = g[orbit[k]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

}  // namespace

std::optional<Permutation> find_conjugator(const StabilizerChain& chain,
                                           std::span<const Permutation> s,
                                           std::span<const Permutation> t) {
  ConjugatorSearch search(chain, s, t);
  if (!search.compatible()) return std::nullopt;
  return search.find({});
}

Subgroup centralizer(const StabilizerChain& chain, std::span<const Permutation> s) {
  ConjugatorSearch search(chain, s, s);
  Subgroup result;
  result.order = 1;
  const std::size_t n = chain.degree();
  for (std::size_t i = chain.depth(); i-- > 0;) {
    const auto& L = chain.level(i);
    std::vector<char> reached(n, 0);
    std::size_t reached_count = 0;
    auto refresh = [&] {
      auto orbit = orbit_of(L.base_point, result.generators, n);
      for (Point x : orbit) reached[x] = 1;
      reached_count = orbit.size();
    };
    refresh();
    std::vector<Point> prescribed(chain.base().begin(), chain.base().begin() + i);
    prescribed.push_back(0);
    for (Point gamma : L.orbit) {
      if (reached[gamma]) continue;
      prescribed.back() = gamma;
      if (auto c = search.find(prescribed)) {
        result.generators.push_back(std::move(*c));
        refresh();
      }
    }
    result.order *= reached_count;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free helpers

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree, 0);
  for (Point x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(x, gens, degree);
    for (Point y : orb) seen[y] = 1;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(std::size_t degree, std::span<const Permutation> gens) {
  if (degree == 0) return true;
  return orbit_of(0, gens, degree).size() == degree;
}

BigInt generated_order(std::size_t degree, std::span<const Permutation> gens) {
  StabilizerChain chain(degree, std::vector<Permutation>(gens.begin(), gens.end()));
  return chain.order();
}

// ---------------------------------------------------------------------------
// Group

struct Group::ClassCache {
  std::once_flag once;
  std::vector<ConjClass> classes;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_cycle_type;
};

Group::Group(std::size_t degree, std::vector<Permutation> generators, std::string name,
             GroupOptions options)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      chain_(degree, generators_),
      options_(std::move(options)),
      cache_(std::make_shared<ClassCache>()) {
  if (generators_.empty()) generators_.push_back(Permutation(degree));
}

void Group::require_member(const Permutation& g) const {
  if (!contains(g)) {
    throw InputError("element " + g.to_cycle_string() + " is not in group " + name_);
  }
}

std::optional<Permutation> Group::transporter(const Permutation& g,
                                              const Permutation& h) const {
  require_member(g);
  require_member(h);
  return find_conjugator(chain_, std::span(&g, 1), std::span(&h, 1));
}

std::optional<Permutation> Group::tuple_conjugator(std::span<const Permutation> s,
                                                   std::span<const Permutation> t) const {
  if (s.size() != t.size()) throw InputError("tuples of different length");
  for (const auto& g : s) require_member(g);
  for (const auto& g : t) require_member(g);
  return find_conjugator(chain_, s, t);
}

Subgroup Group::centralizer(std::span<const Permutation> s) const {
  return braid::centralizer(chain_, s);
}

BigInt Group::center_order() const { return centralizer(generators_).order; }

bool Group::is_transitive() const { return braid::is_transitive(degree(), generators_); }

std::optional<std::vector<std::vector<Point>>> Group::minimal_blocks() const {
  const std::size_t n = degree();
  if (!is_transitive()) throw InputError("minimal_blocks requires a transitive group");
  std::optional<std::vector<std::vector<Point>>> best;
  std::vector<Point> parent(n);
  std::vector<std::pair<Point, Point>> queue;
  for (Point k = 1; k < n; ++k) {
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    queue.assign(1, {0, k});
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      Point ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent[std::max(ra, rb)] = std::min(ra, rb);
      for (const auto& g : generators_) queue.push_back({g[a], g[b]});
    }
    std::map<Point, std::vector<Point>> blocks;
    for (Point x = 0; x < n; ++x) blocks[find(x)].push_back(x);
    if (blocks.size() == 1) continue;
    if (!best || blocks.begin()->second.size() < best->front().size()) {
      std::vector<std::vector<Point>> system;
      for (auto& [root, block] : blocks) system.push_back(std::move(block));
      best = std::move(system);
    }
  }
  return best;
}

std::vector<Permutation> Group::elements() const {
  if (order() > options_.listing_bound) {
    throw ResourceCapError("group order " + order().str() +
                           " exceeds the element listing bound");
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order()));
  chain_.for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

std::vector<Permutation> Group::class_elements(std::size_t k) const {
  const ConjClass& cls = classes().at(k);
  if (cls.size > options_.listing_bound) {
    throw ResourceCapError("class " + cls.label + " of size " + cls.size.str() +
                           " exceeds the enumeration bound");
  }
  std::vector<Permutation> out{cls.representative};
  std::unordered_set<Permutation, PermutationHash> seen{cls.representative};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation y = conjugate(out[i], g);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

namespace {

std::string class_letters(std::size_t k) {
  std::string s;
  ++k;
  while (k > 0) {
    --k;
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  }
  return s;
}

std::vector<std::uint64_t> proper_divisors_above_one(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

const std::vector<ConjClass>& Group::classes() const {
  std::call_once(cache_->once, [this] {
    if (order() > options_.class_bound) {
      throw ResourceCapError("group order " + order().str() +
                             " exceeds the class computation bound");
    }
    std::vector<ConjClass> found;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_type;
    BigInt total = 0;

    auto add_class = [&](const Permutation& x) {
      ConjClass c;
      c.representative = x;
      c.element_order = x.order();
      c.cycle_type = x.cycle_type();
      c.index = braid::index(x);
      Subgroup cent = braid::centralizer(chain_, std::span(&x, 1));
      c.centralizer_generators = std::move(cent.generators);
      c.centralizer_order = cent.order;
      c.size = order() / cent.order;
      total += c.size;
      by_type[c.cycle_type].push_back(found.size());
      found.push_back(std::move(c));
    };
    auto identify = [&](const Permutation& x) -> std::optional<std::size_t> {
      auto it = by_type.find(x.cycle_type());
      if (it == by_type.end()) return std::nullopt;
      for (std::size_t k : it->second) {
        const Permutation& rep = found[k].representative;
        if (rep == x || find_conjugator(chain_, std::span(&rep, 1), std::span(&x, 1))) {
          return k;
        }
      }
      return std::nullopt;
    };
    auto consider = [&](const Permutation& x) {
      if (!identify(x)) add_class(x);
    };

    add_class(identity());
    Rng rng(options_.class_seed);
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_limit = 20000;
    while (total < order()) {
      if (attempts++ > attempt_limit && order() <= options_.listing_bound) {
        chain_.for_each_element([&](const Permutation& g) {
          if (total < order()) consider(g);
        });
        break;
      }
      Permutation x = chain_.random_element(rng);
      const std::uint64_t ord = x.order();
      consider(x);
      for (std::uint64_t d : proper_divisors_above_one(ord)) consider(x.pow(static_cast<long long>(d)));
    }
    if (total != order()) {
      throw InvariantError("class sizes sum to " + total.str() + ", group order " +
                           order().str());
    }

    // Ordering: element order, then descending size, then power classes,
    // then smallest image array.
    std::vector<std::size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (found[a].element_order != found[b].element_order)
        return found[a].element_order < found[b].element_order;
      return found[a].size > found[b].size;
    });
    std::vector<std::size_t> rank(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

    auto class_index_of = [&](const Permutation& x) {
      auto k = identify(x);
      if (!k) throw InvariantError("power of a class element escaped all classes");
      return *k;
    };
    std::vector<std::vector<std::size_t>> power_key(found.size());
    for (std::size_t k = 0; k < found.size(); ++k) {
      for (std::uint64_t d : proper_divisors_above_one(found[k].element_order)) {
        power_key[k].push_back(rank[class_index_of(
            found[k].representative.pow(static_cast<long long>(d)))]);
      }
    }
    // Tied classes get their lexicographically smallest element as
    // representative.
    auto tied = [&](std::size_t a, std::size_t b) {
      return found[a].element_order == found[b].element_order &&
             found[a].size == found[b].size && power_key[a] == power_key[b];
    };
    for (std::size_t i = 0; i < perm.size(); ++i) {
      bool has_tie = (i > 0 && tied(perm[i - 1], perm[i])) ||
                     (i + 1 < perm.size() && tied(perm[i], perm[i + 1]));
      ConjClass& c = found[perm[i]];
      if (!has_tie || c.size > options_.tie_enumeration_bound) continue;
      Permutation best = c.representative;
      std::vector<Permutation> queue{best};
      std::unordered_set<Permutation, PermutationHash> seen{best};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : generators_) {
          Permutation y = conjugate(queue[q], g);
          if (seen.insert(y).second) {
            if (y < best) best = y;
            queue.push_back(std::move(y));
          }
        }
      }
      if (best != c.representative) {
        c.representative = best;
        Subgroup cent = braid::centralizer(chain_, std::span(&best, 1));
        c.centralizer_generators = std::move(cent.generators);
      }
    }
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (found[a].element_order != found[b].element_order)
        return found[a].element_order < found[b].element_order;
      if (found[a].size != found[b].size) return found[a].size > found[b].size;
      if (power_key[a] != power_key[b]) return power_key[a] < power_key[b];
      return found[a].representative < found[b].representative;
    });

    std::vector<ConjClass> sorted;
    std::uint64_t current_order = 0;
    std::size_t letter = 0;
    for (std::size_t k : perm) {
      ConjClass c = std::move(found[k]);
      if (c.element_order != current_order) {
        current_order = c.element_order;
        letter = 0;
      }
      c.label = std::to_string(c.element_order) + class_letters(letter++);
      sorted.push_back(std::move(c));
    }
    by_type.clear();
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      by_type[sorted[k].cycle_type].push_back(k);
    }
    for (auto& c : sorted) {
      const Permutation inv = c.representative.inverse();
      for (std::size_t k : by_type[c.cycle_type]) {
        const Permutation& rep = sorted[k].representative;
        if (rep == inv || find_conjugator(chain_, std::span(&rep, 1), std::span(&inv, 1))) {
          c.inverse_class = k;
          break;
        }
      }
    }
    cache_->classes = std::move(sorted);
    cache_->by_cycle_type = std::move(by_type);
  });
  return cache_->classes;
}

std::size_t Group::class_of(const Permutation& g) const {
  const auto& cls = classes();
  auto it = cache_->by_cycle_type.find(g.cycle_type());
  if (it != cache_->by_cycle_type.end()) {
    if (it->second.size() == 1 && contains(g)) return it->second.front();
    for (std::size_t k : it->second) {
      const Permutation& rep = cls[k].representative;
      if (rep == g) return k;
      if (find_conjugator(chain_, std::span(&rep, 1), std::span(&g, 1))) return k;
    }
  }
  throw InputError("element " + g.to_cycle_string() + " is not in group " + name_);
}

std::optional<std::size_t> Group::class_by_label(const std::string& label) const {
  const auto& cls = classes();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (cls[k].label == label) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coset action and normalizer

Permutation CosetAction::map(const Permutation& g) const {
  const std::size_t m = coset_representatives.size();
  std::vector<Point> images(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Permutation h = coset_representatives[j] * g;
    std::size_t found = m;
    for (std::size_t c = 0; c < m; ++c) {
      if (subgroup_chain->contains(h * coset_representatives[c].inverse())) {
        found = c;
        break;
      }
    }
    if (found == m) throw InputError("element is not in the acting group");
    images[j] = static_cast<Point>(found);
  }
  return Permutation::from_images(std::move(images));
}

CosetAction coset_action(const Group& G, const std::vector<Permutation>& U_generators,
                         std::uint64_t max_index) {
  for (const auto& u : U_generators) {
    if (u.degree() != G.degree() || !G.contains(u)) {
      throw InputError("subgroup generator " + u.to_cycle_string() + " is not in G");
    }
  }
  auto U = std::make_shared<const StabilizerChain>(G.degree(), U_generators);
  if (G.order() % U->order() != 0) throw InvariantError("|U| does not divide |G|");
  const BigInt index = G.order() / U->order();
  if (index > max_index) {
    throw ResourceCapError("coset action of index " + index.str() + " exceeds bound");
  }
  const std::size_t n = G.degree();
  std::vector<std::uint32_t> u_orbit(n);
  for (const auto& orb : orbits(n, U_generators)) {
    for (Point x : orb) u_orbit[x] = orb.front();
  }
  // The images of U's orbits under h depend only on the coset Uh.
  auto key = [&](const Permutation& h) {
    std::vector<std::uint32_t> k(n);
    for (Point x = 0; x < n; ++x) k[h[x]] = u_orbit[x];
    return k;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
      std::size_t h = v.size();
      for (auto x : v) h = h * 1000003u ^ x;
      return h;
    }
  };
  std::unordered_map<std::vector<std::uint32_t>, std::vector<std::size_t>, KeyHash> buckets;
  std::vector<Permutation> reps{Permutation(n)};
  buckets[key(reps[0])].push_back(0);
  const auto& gens = G.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation h = reps[j] * gens[gi];
      auto& bucket = buckets[key(h)];
      std::size_t target = reps.size();
      for (std::size_t c : bucket) {
        if (U->contains(h * reps[c].inverse())) {
          target = c;
          break;
        }
      }
      if (target == reps.size()) {
        bucket.push_back(reps.size());
        reps.push_back(std::move(h));
      }
      images[gi].push_back(static_cast<Point>(target));
    }
  }
  if (reps.size() != index) throw InvariantError("coset enumeration miscounted");
  CosetAction result;
  for (auto& im : images) result.generator_images.push_back(Permutation::from_images(std::move(im)));
  result.coset_representatives = std::move(reps);
  result.subgroup_chain = U;
  result.group = Group(static_cast<std::size_t>(index), result.generator_images,
                       G.name() + " on cosets", G.options());
  if (result.group.order() != G.order()) {
    throw InputError("U is not core-free: the coset action has kernel of order " +
                     BigInt(G.order() / result.group.order()).str());
  }
  return result;
}

Group normalizer_in_sym(const Group& G, std::size_t max_degree) {
  const std::size_t n = G.degree();
  if (n > max_degree) {
    throw InputError("degree " + std::to_string(n) +
                     " is above the brute-force normalizer bound; supply normalizer "
                     "generators");
  }
  std::vector<Permutation> gens = G.generators();
  StabilizerChain current(n, gens);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    Permutation x = Permutation::from_images(images);
    if (current.contains(x)) continue;
    bool normalizes = std::all_of(G.generators().begin(), G.generators().end(),
                                  [&](const Permutation& g) { return G.contains(conjugate(g, x)); });
    if (normalizes) {
      gens.push_back(x);
      current = StabilizerChain(n, gens);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return Group(n, gens, "N(" + G.name() + ")", G.options());
}

}  // namespace braid
