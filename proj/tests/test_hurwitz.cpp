#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "braid/errors.hpp"
#include "braid/hurwitz.hpp"
#include "braid/io.hpp"
#include "oracle.hpp"

using namespace braid;

namespace {

GTuple tuple_of(std::size_t n, std::initializer_list<const char*> xs) {
  std::vector<Permutation> e;
  for (const char* s : xs) e.push_back(parse_permutation(s, n));
  return GTuple(e);
}

ClassSignature sig_of(const Group& G, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> k;
  for (const char* l : labels) k.push_back(*G.class_by_label(l));
  return make_signature(G, k);
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t cycles_on(const std::map<std::size_t, std::size_t>& f) {
  std::set<std::size_t> seen;
  std::size_t c = 0;
  for (const auto& [x, _] : f) {
    if (seen.count(x)) continue;
    ++c;
    for (std::size_t y = x; seen.insert(y).second; y = f.at(y)) {
    }
  }
  return c;
}

// Genus of the curve whose fiber is the set of classes of `uf` meeting
// `members` and whose branch cycles are the given maps on raw tuples.
long raw_curve_genus(UnionFind& uf, const std::vector<std::size_t>& members,
                     const std::vector<std::function<std::size_t(std::size_t)>>& cycles) {
  std::set<std::size_t> fiber;
  for (auto m : members) fiber.insert(uf.find(m));
  std::size_t total = 0;
  for (const auto& c : cycles) {
    std::map<std::size_t, std::size_t> f;
    for (auto m : members) {
      const auto from = uf.find(m), to = uf.find(c(m));
      auto [it, fresh] = f.emplace(from, to);
      REQUIRE(it->second == to);
    }
    total += fiber.size() - cycles_on(f);
  }
  REQUIRE(total % 2 == 0);
  return static_cast<long>(total / 2) - static_cast<long>(fiber.size()) + 1;
}

// Inner and straight genus of the curve through `seed`, by brute force on
// raw product-one 4-tuples in every class order.
std::pair<long, long> raw_genera(const Group& G, const GTuple& seed) {
  std::vector<std::size_t> multiset;
  for (const auto& g : seed.entries) multiset.push_back(G.class_of(g));
  std::sort(multiset.begin(), multiset.end());
  std::vector<std::vector<Permutation>> tuples;
  do {
    for (auto& t : oracle::raw_tuples(G, multiset)) tuples.push_back(std::move(t));
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  std::map<std::vector<Permutation>, std::size_t> at;
  for (std::size_t i = 0; i < tuples.size(); ++i) at[tuples[i]] = i;
  const std::size_t m = tuples.size();
  auto word = [&](const BraidWord& w) {
    return [&, w](std::size_t i) { return at.at(apply_word(GTuple(tuples[i]), w).entries); };
  };
  auto conj = [&](std::size_t i, const Permutation& g) {
    std::vector<Permutation> c;
    for (const auto& x : tuples[i]) c.push_back(conjugate(x, g));
    return at.at(c);
  };
  UnionFind braid(m), inn(m), inn_v(m);
  const BraidWord v1{{1, -3}}, v2{{1, 2, 3, 1, 2, 3}};
  for (std::size_t i = 0; i < m; ++i) {
    for (int q = 1; q <= 3; ++q) braid.unite(i, word(BraidWord{{q}})(i));
    for (const auto& g : G.generators()) {
      braid.unite(i, conj(i, g));
      inn.unite(i, conj(i, g));
      inn_v.unite(i, conj(i, g));
    }
    inn_v.unite(i, word(v1)(i));
    inn_v.unite(i, word(v2)(i));
  }
  const std::size_t s = at.at(seed.entries);
  std::vector<std::size_t> orbit;
  for (std::size_t i = 0; i < m; ++i) {
    if (braid.find(i) == braid.find(s)) orbit.push_back(i);
  }
  const long inner = raw_curve_genus(
      inn_v, orbit, {word(BraidWord{{1, 2}}), word(BraidWord{{1, 2, 1}}), word(BraidWord{{2}})});
  // Pure orbit of the seed under Q1^2, Q2^2 and Inn.
  UnionFind pure(m);
  for (std::size_t i : orbit) {
    pure.unite(i, word(BraidWord{{1, 1}})(i));
    pure.unite(i, word(BraidWord{{2, 2}})(i));
    for (const auto& g : G.generators()) pure.unite(i, conj(i, g));
  }
  std::vector<std::size_t> suborbit;
  for (std::size_t i : orbit) {
    if (pure.find(i) == pure.find(s)) suborbit.push_back(i);
  }
  const long straight = raw_curve_genus(
      inn, suborbit,
      {word(BraidWord{{1, 1}}), word(BraidWord{{2, 2}}), word(BraidWord{{-2, -2, -1, -1}})});
  return {inner, straight};
}

void check_report_invariants(const CurveGenusReport& r) {
  const auto& c = r.branch_cycles;
  CHECK(c[0].degree() == r.F_size);
  CHECK(is_transitive(r.F_size, c));
  std::size_t total = 0;
  for (const auto& x : c) total += index(x);
  CHECK(total % 2 == 0);
  CHECK(static_cast<long>(total) == 2 * (static_cast<long>(r.F_size) + r.genus - 1));
  CHECK(r.genus >= 0);
  if (r.variant != CurveVariant::straight) {
    CHECK(c[0].pow(3).is_identity());
    CHECK(c[1].pow(2).is_identity());
  }
}

}  // namespace

TEST_CASE("tuple genus") {
  CHECK(tuple_genus(tuple_of(3, {"(1,2)", "(2,3)", "(1,2,3)"})) == 0);
  CHECK(tuple_genus(tuple_of(3, {"(1,2)", "(1,2)", "(1,3)", "(1,3)"})) == 0);
  // Four 3-cycles in A4: 4 * 2 = 2(4 + g - 1) gives g = 1.
  auto t = tuple_of(4, {"(1,2,3)", "(1,3,2)", "(1,2,4)", "(1,4,2)"});
  REQUIRE(product_holds(t));
  CHECK(tuple_genus(t) == 1);
  CHECK_THROWS_AS(tuple_genus(tuple_of(3, {"(1,2)", "()", "(1,2)"})), InputError);
  CHECK_THROWS_AS(tuple_genus(tuple_of(3, {"(1,2)", "(1,2)"})), InputError);
  // Not transitive.
  CHECK_THROWS_AS(tuple_genus(tuple_of(4, {"(1,2)", "(1,2)", "(3,4)", "(3,4)"})), InputError);
  // Product 1 forces an even index sum, so the parity check only sees
  // tuples with a wrong product.
  CHECK_THROWS_AS(tuple_genus(tuple_of(3, {"(1,2)", "(2,3)", "(1,2)"})), InputError);

  Group L = load_group(oracle::data("L3_2"));
  auto res = all_braid_orbits(L, sig_of(L, {"2A", "2A", "2A", "7A"}));
  for (const auto& o : res.orbits) {
    if (o.generates_G) CHECK(tuple_genus(o.representatives.front()) == 0);
  }
}

TEST_CASE("genus zero systems") {
  auto s = is_genus_zero_system(tuple_of(3, {"(1,2)", "(2,3)", "(1,2,3)"}));
  CHECK(s.genus_zero);
  CHECK(s.primitive);
  CHECK(is_genus_zero_system(tuple_of(3, {"(1,2)", "(1,2)", "(1,3)", "(1,3)"})).genus_zero);
  // Dihedral group of order 8 on 4 points, blocks {1,3}, {2,4}.
  auto d = tuple_of(4, {"(1,2,3,4)", "(1,3)", "(1,2)(3,4)"});
  REQUIRE(product_holds(d));
  auto dc = is_genus_zero_system(d);
  CHECK(dc.genus_zero);
  CHECK_FALSE(dc.primitive);
  CHECK_FALSE(is_genus_zero_system(tuple_of(4, {"(1,2,3)", "(1,3,2)", "(1,2,4)", "(1,4,2)"})).genus_zero);
  CHECK_FALSE(is_genus_zero_system(tuple_of(3, {"(1,2)", "(2,3)", "(1,2)"})).genus_zero);
}

TEST_CASE("genus zero signatures") {
  Group L = load_group(oracle::data("L3_2"));
  const auto& cls = L.classes();
  auto sigs = genus_zero_signatures(L, 6);
  // Independent enumeration over ordered sequences, sorted afterwards.
  std::set<std::vector<std::size_t>> expected;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t sum) -> void {
    if (sum == 12 && cur.size() >= 3) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      expected.insert(s);
    }
    if (cur.size() == 6 || sum >= 12) return;
    for (std::size_t k = 1; k < cls.size(); ++k) {
      cur.push_back(k);
      self(self, sum + cls[k].index);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::set<std::vector<std::size_t>> got;
  for (const auto& s : sigs) {
    CHECK(s.block_ordered());
    std::size_t sum = 0;
    for (auto k : s.classes) {
      CHECK(k != 0);
      sum += cls[k].index;
    }
    CHECK(sum == 12);
    got.insert(s.classes);
  }
  CHECK(got.size() == sigs.size());
  CHECK(got == expected);
  for (const char* row : {"(2A,2A,2A,2A,2A,2A)", "(2A,2A,2A,2A,3A)", "(2A,2A,2A,2A,4A)",
                          "(2A,2A,2A,7A)", "(2A,2A,2A,7B)", "(2A,2A,3A,3A)", "(2A,2A,3A,4A)",
                          "(2A,2A,4A,4A)", "(2A,3A,7A)", "(2A,3A,7B)", "(2A,4A,7A)",
                          "(2A,4A,7B)", "(3A,3A,4A)", "(3A,4A,4A)", "(4A,4A,4A)"}) {
    bool present = false;
    for (const auto& s : sigs) present = present || s.to_string() == row;
    CHECK_MESSAGE(present, row);
  }
  CHECK(genus_zero_signatures(L, 2).empty());
}

TEST_CASE("V-orbits") {
  Group S3(3, {parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)")}, "S3");
  auto full = full_braid_orbit(tuple_of(3, {"(1,2)", "(1,2)", "(1,3)", "(1,3)"}), S3);
  CHECK(full.representatives.size() == 4);
  auto F = v_orbits(full);
  CHECK(F.blocks.size() >= 1);
  CHECK(F.blocks.size() <= 4);
  // V is a Klein group on the full orbit of Inn-classes.
  const auto& a = full.actions;
  const Permutation v1 = a[0] * a[2].inverse();
  const Permutation q = a[0] * a[1] * a[2];
  const Permutation v2 = q * q;
  CHECK((v1 * v1).is_identity());
  CHECK((v2 * v2).is_identity());
  CHECK(v1 * v2 == v2 * v1);

  auto single = full_braid_orbit(tuple_of(3, {"(1,2)", "(1,2)", "(1,2)", "(1,2)"}), S3);
  CHECK(single.representatives.size() == 1);
  CHECK(v_orbits(single).blocks.size() == 1);
  CHECK_THROWS_AS(full_braid_orbit(tuple_of(3, {"(1,2)", "(2,3)", "(1,2,3)"}), S3), InputError);
}

TEST_CASE("S3 session genera") {
  Group S3(3, {parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)")}, "S3");
  auto res = all_braid_orbits(S3, sig_of(S3, {"2A", "2A", "2A", "2A"}));
  std::size_t generating = 0;
  for (const auto& o : res.orbits) {
    if (!o.generates_G) continue;
    ++generating;
    auto inner = reduced_genus(o, S3, CurveVariant::inner);
    auto straight = reduced_genus(o, S3, CurveVariant::straight);
    REQUIRE(inner.size() == 1);
    REQUIRE(straight.size() == 1);
    CHECK(inner[0].genus == 0);
    CHECK(straight[0].genus == 0);
  }
  CHECK(generating == 1);
}

TEST_CASE("Table 1 genera against brute force") {
  Group L = load_group(oracle::data("L3_2"));
  struct Row {
    std::array<const char*, 4> classes;
    long genus, straight;
  };
  const std::vector<Row> rows{{{"2A", "2A", "2A", "7A"}, 0, 0},
                              {{"2A", "2A", "2A", "7B"}, 0, 0},
                              {{"2A", "2A", "3A", "3A"}, 0, 2},
                              {{"2A", "2A", "3A", "4A"}, 0, 1},
                              {{"2A", "2A", "4A", "4A"}, 0, 1}};
  for (const auto& row : rows) {
    std::vector<std::size_t> k;
    for (const char* l : row.classes) k.push_back(*L.class_by_label(l));
    const auto sig = make_signature(L, k);
    auto res = all_braid_orbits(L, sig);
    REQUIRE(res.complete);
    std::size_t generating = 0;
    for (const auto& o : res.orbits) {
      auto inner = reduced_genus(o, L, CurveVariant::inner);
      auto straight = reduced_genus(o, L, CurveVariant::straight);
      for (const auto& r : inner) check_report_invariants(r);
      for (const auto& r : straight) check_report_invariants(r);
      if (!o.generates_G) continue;
      ++generating;
      REQUIRE(inner.size() == 1);
      CHECK_MESSAGE(inner[0].genus == row.genus, sig.to_string());
      for (const auto& r : straight) CHECK_MESSAGE(r.genus == row.straight, sig.to_string());
      auto [raw_inner, raw_straight] = raw_genera(L, o.representatives.front());
      CHECK(raw_inner == inner[0].genus);
      CHECK(raw_straight == straight[0].genus);
    }
    CHECK(generating == 1);
  }
}

TEST_CASE("normalizer curve") {
  // A4 inside S4: N-classes merge the two 3-cycle classes.
  Group A4 = load_group(oracle::data("A4"));
  Group N = normalizer_in_sym(A4);
  CHECK(N.order() == 24);
  OrbitOptions opt;
  opt.equivalence = &N;
  auto res = all_braid_orbits(A4, sig_of(A4, {"2A", "2A", "3A", "3B"}), opt);
  REQUIRE(res.complete);
  for (const auto& o : res.orbits) {
    auto reps = reduced_genus(o, N, CurveVariant::normalizer);
    REQUIRE(reps.size() == 1);
    check_report_invariants(reps[0]);
    auto inner = reduced_genus(o, A4, CurveVariant::inner);
    // The N-curve is a quotient of the inner curve.
    CHECK(inner[0].F_size % reps[0].F_size == 0);
    CHECK(reps[0].genus <= inner[0].genus);
  }
}

TEST_CASE("reduced genus rejects other lengths") {
  Group L = load_group(oracle::data("L3_2"));
  auto res = all_braid_orbits(L, sig_of(L, {"2A", "3A", "7A"}));
  REQUIRE_FALSE(res.orbits.empty());
  CHECK_THROWS_AS(reduced_genus(res.orbits.front(), L, CurveVariant::inner), InputError);
}
