// Brute-force reference computations used as test oracles. Nothing here
// touches stabilizer chains.
#ifndef BRAID_TESTS_ORACLE_HPP
#define BRAID_TESTS_ORACLE_HPP

#include <map>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <string>
#include <vector>

#include "braid/braid.hpp"
#include "braid/group.hpp"
#include "braid/io.hpp"
#include "braid/perm.hpp"

namespace oracle {

using braid::Permutation;
using braid::Point;

inline std::string data(const std::string& name) {
  return std::string(BRAID_DATA_DIR) + "/groups/" + name + ".grp";
}

inline std::vector<Permutation> closure(std::size_t degree,
                                        const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> out{Permutation(degree)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = out[i] * g;
      if (seen.insert(h).second) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

inline bool tuple_conjugate(const std::vector<Permutation>& elements,
                            const std::vector<Permutation>& s,
                            const std::vector<Permutation>& t) {
  for (const auto& c : elements) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) ok = braid::conjugate(s[i], c) == t[i];
    if (ok) return true;
  }
  return false;
}

inline std::size_t centralizer_order(const std::vector<Permutation>& elements,
                                     const std::vector<Permutation>& s) {
  std::size_t count = 0;
  for (const auto& c : elements) {
    bool ok = true;
    for (const auto& x : s) ok = ok && x * c == c * x;
    count += ok;
  }
  return count;
}

// Conjugacy classes as sorted element lists, ordered by smallest element.
inline std::vector<std::vector<Permutation>> classes(const std::vector<Permutation>& elements) {
  std::set<Permutation> done;
  std::vector<std::vector<Permutation>> out;
  for (const auto& x : elements) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& c : elements) cls.insert(braid::conjugate(x, c));
    done.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

// Every tuple of E(C_1..C_r) with product 1, by direct enumeration.
inline std::vector<std::vector<Permutation>> raw_tuples(const braid::Group& G,
                                                        const std::vector<std::size_t>& sig) {
  std::vector<std::vector<Permutation>> cls;
  for (std::size_t k : sig) {
    auto e = G.class_elements(k);
    std::sort(e.begin(), e.end());
    cls.push_back(std::move(e));
  }
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> cur;
  auto rec = [&](auto&& self, std::size_t i, const Permutation& prefix) -> void {
    if (i + 1 == sig.size()) {
      Permutation last = prefix.inverse();
      if (std::binary_search(cls[i].begin(), cls[i].end(), last)) {
        cur.push_back(last);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (const auto& g : cls[i]) {
      cur.push_back(g);
      self(self, i + 1, prefix * g);
      cur.pop_back();
    }
  };
  rec(rec, 0, G.identity());
  return out;
}

struct TupleHash {
  std::size_t operator()(const std::vector<Permutation>& t) const {
    std::size_t h = t.size();
    for (const auto& g : t) h = h * 0x9e3779b97f4a7c15ULL + g.hash();
    return h;
  }
};

// Braid orbits on raw tuples, saturated under conjugation. Each component is
// described by (number of raw tuples, number of conjugation classes).
struct RawOrbits {
  std::vector<std::vector<Permutation>> tuples;
  std::unordered_map<std::vector<Permutation>, std::size_t, TupleHash> index;
  std::vector<std::size_t> component;  // per tuple
  std::vector<std::pair<std::size_t, std::size_t>> summary;  // sorted
};

inline RawOrbits raw_orbits(const braid::Group& G, const std::vector<std::size_t>& sig) {
  RawOrbits R;
  R.tuples = raw_tuples(G, sig);
  for (std::size_t i = 0; i < R.tuples.size(); ++i) R.index[R.tuples[i]] = i;
  const std::size_t m = R.tuples.size();
  std::vector<std::size_t> all(m), inn(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = inn[i] = i;
  auto find = [](std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  auto unite = [&](std::vector<std::size_t>& p, std::size_t a, std::size_t b) {
    a = find(p, a);
    b = find(p, b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  };
  std::vector<std::size_t> partition;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    if (k == 0 || sig[k] != sig[k - 1]) partition.push_back(0);
    ++partition.back();
  }
  auto words = braid::bp_generators(partition);
  for (std::size_t i = 0; i < m; ++i) {
    braid::GTuple t(R.tuples[i]);
    for (const auto& w : words) {
      unite(all, i, R.index.at(braid::apply_word(t, w.word).entries));
    }
    for (const auto& g : G.generators()) {
      std::vector<Permutation> c;
      for (const auto& x : R.tuples[i]) c.push_back(braid::conjugate(x, g));
      const std::size_t j = R.index.at(c);
      unite(all, i, j);
      unite(inn, i, j);
    }
  }
  std::map<std::size_t, std::pair<std::size_t, std::set<std::size_t>>> comps;
  R.component.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    R.component[i] = find(all, i);
    auto& c = comps[R.component[i]];
    ++c.first;
    c.second.insert(find(inn, i));
  }
  for (auto& [root, c] : comps) R.summary.emplace_back(c.first, c.second.size());
  std::sort(R.summary.begin(), R.summary.end());
  return R;
}

}  // namespace oracle

#endif
