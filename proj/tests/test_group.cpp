#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braid/errors.hpp"
#include "braid/group.hpp"
#include "braid/io.hpp"
#include "oracle.hpp"

using namespace braid;

namespace {

Group make(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> g;
  for (const char* s : gens) g.push_back(parse_permutation(s, n));
  return Group(n, g);
}

std::vector<std::size_t> class_sizes(const Group& G) {
  std::vector<std::size_t> out;
  for (const auto& c : G.classes()) out.push_back(static_cast<std::size_t>(c.size));
  return out;
}

}  // namespace

TEST_CASE("orders") {
  CHECK(make(3, {"(1,2)", "(1,2,3)"}).order() == 6);
  CHECK(load_group(oracle::data("L3_2")).order() == 168);
  CHECK(load_group(oracle::data("M11")).order() == 7920);
  CHECK(load_group(oracle::data("M12")).order() == 95040);
  CHECK(load_group(oracle::data("M24")).order() == 244823040);
  CHECK(load_group(oracle::data("L5_2")).order() == 9999360);
}

TEST_CASE("chain order matches element closure") {
  for (const char* name : {"S3", "S4", "A4", "D5", "L3_2", "L2_11", "L3_3"}) {
    INFO(name);
    auto f = read_group_file(oracle::data(name));
    Group G(f.degree, f.generators);
    auto all = oracle::closure(f.degree, f.generators);
    CHECK(G.order() == all.size());
    auto listed = G.elements();
    std::sort(listed.begin(), listed.end());
    CHECK(listed == all);
    for (const auto& g : all) CHECK(G.contains(g));
  }
  Group S3 = make(3, {"(1,2)"});
  CHECK_FALSE(S3.contains(parse_permutation("(1,2,3)")));
}

TEST_CASE("random elements are uniform enough on S3") {
  Group G = make(3, {"(1,2)", "(1,2,3)"});
  Rng rng(3);
  std::map<Permutation, int> hits;
  for (int k = 0; k < 6000; ++k) ++hits[G.random_element(rng)];
  CHECK(hits.size() == 6);
  for (auto& [g, n] : hits) CHECK(n > 800);
}

TEST_CASE("classes of small groups") {
  Group S3 = make(3, {"(1,2)", "(1,2,3)"});
  CHECK(class_sizes(S3) == std::vector<std::size_t>{1, 3, 2});
  CHECK(S3.classes()[1].label == "2A");
  CHECK(S3.classes()[2].label == "3A");

  Group L = load_group(oracle::data("L3_2"));
  std::vector<std::string> labels;
  for (const auto& c : L.classes()) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"1A", "2A", "3A", "4A", "7A", "7B"});
  CHECK(class_sizes(L) == std::vector<std::size_t>{1, 21, 56, 42, 24, 24});
  CHECK(L.classes()[4].inverse_class == 5);
}

TEST_CASE("classes agree with brute force") {
  for (const char* name : {"S3", "S4", "A4", "D5", "L3_2", "L2_11"}) {
    INFO(name);
    Group G = load_group(oracle::data(name));
    auto all = G.elements();
    auto brute = oracle::classes(all);
    const auto& cls = G.classes();
    CHECK(cls.size() == brute.size());
    BigInt total = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      total += cls[k].size;
      CHECK(cls[k].size * cls[k].centralizer_order == G.order());
      CHECK(generated_order(G.degree(), cls[k].centralizer_generators) ==
            cls[k].centralizer_order);
      for (const auto& c : cls[k].centralizer_generators) {
        CHECK(c * cls[k].representative == cls[k].representative * c);
      }
      auto elems = G.class_elements(k);
      std::sort(elems.begin(), elems.end());
      CHECK(std::find(brute.begin(), brute.end(), elems) != brute.end());
      CHECK(G.class_of(elems.back()) == k);
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("labels are deterministic across generating sets") {
  // The same group given by different generators gets the same labelled
  // class of each element.
  Group a = load_group(oracle::data("L3_2"));
  std::vector<Permutation> gens = a.generators();
  gens.push_back(gens[0] * gens[1]);
  std::reverse(gens.begin(), gens.end());
  Group b(a.degree(), gens);
  for (std::size_t k = 0; k < a.classes().size(); ++k) {
    CHECK(b.classes()[k].label == a.classes()[k].label);
  }
  // Tied classes (7A, 7B) carry their smallest element as representative.
  for (std::size_t k : {4, 5}) {
    CHECK(b.classes()[k].representative == a.classes()[k].representative);
  }
}

TEST_CASE("transporter") {
  Group S3 = make(3, {"(1,2)", "(1,2,3)"});
  auto g = parse_permutation("(1,2)", 3);
  auto h = parse_permutation("(1,3)", 3);
  auto t = S3.transporter(g, h);
  REQUIRE(t);
  CHECK(conjugate(g, *t) == h);
  CHECK_FALSE(S3.transporter(g, parse_permutation("(1,2,3)", 3)));
  auto same = S3.transporter(g, g);
  REQUIRE(same);
  CHECK(conjugate(g, *same) == g);
  Group C3 = make(3, {"(1,2,3)"});
  CHECK_THROWS_AS(C3.transporter(g, h), InputError);
}

TEST_CASE("tuple_conjugator agrees with brute force") {
  Group S3 = make(3, {"(1,2)", "(1,2,3)"});
  std::vector<Permutation> s{parse_permutation("(1,2)", 3), parse_permutation("(1,2)", 3)};
  std::vector<Permutation> t{parse_permutation("(1,3)", 3), parse_permutation("(2,3)", 3)};
  CHECK_FALSE(S3.tuple_conjugator(s, t));

  std::mt19937_64 rng(99);
  for (const char* name : {"S4", "D5", "L3_2", "A4"}) {
    Group G = load_group(oracle::data(name));
    auto all = G.elements();
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Permutation> a, b;
      const int r = 2 + trial % 3;
      Permutation c = all[rng() % all.size()];
      for (int i = 0; i < r; ++i) a.push_back(all[rng() % all.size()]);
      if (trial % 2 == 0) {
        for (const auto& x : a) b.push_back(conjugate(x, c));
      } else {
        for (int i = 0; i < r; ++i) b.push_back(conjugate(a[i], all[rng() % all.size()]));
      }
      auto found = G.tuple_conjugator(a, b);
      CHECK(found.has_value() == oracle::tuple_conjugate(all, a, b));
      if (found) {
        for (int i = 0; i < r; ++i) CHECK(conjugate(a[i], *found) == b[i]);
        CHECK(G.contains(*found));
      }
      CHECK(G.centralizer(a).order == oracle::centralizer_order(all, a));
    }
  }
}

TEST_CASE("centralizers in larger groups") {
  Group M = load_group(oracle::data("M12"));
  CHECK(M.center_order() == 1);
  for (const auto& c : M.classes()) {
    CHECK(c.size * c.centralizer_order == M.order());
  }
  CHECK(M.classes().size() == 15);
  Group M24 = load_group(oracle::data("M24"));
  CHECK(M24.classes().size() == 26);
}

TEST_CASE("transitivity and blocks") {
  Group S3 = make(3, {"(1,2)", "(1,2,3)"});
  CHECK(S3.is_transitive());
  CHECK_FALSE(S3.minimal_blocks());
  Group V = make(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(V.is_transitive());
  auto blocks = V.minimal_blocks();
  REQUIRE(blocks);
  CHECK(blocks->size() == 2);
  CHECK(blocks->front().size() == 2);
  // Every pair block system is a genuine block system.
  for (const auto& b : *blocks) {
    for (const auto& g : V.generators()) {
      std::vector<Point> img;
      for (Point x : b) img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      CHECK(std::find(blocks->begin(), blocks->end(), img) != blocks->end());
    }
  }
  Group T = make(3, {"(1,2)"});
  CHECK_FALSE(T.is_transitive());
  CHECK_FALSE(load_group(oracle::data("L3_2")).minimal_blocks());
  CHECK(make(6, {"(1,2,3,4,5,6)"}).minimal_blocks()->front().size() == 2);
}

TEST_CASE("coset action") {
  Group S3 = make(3, {"(1,2)", "(1,2,3)"});
  auto act = coset_action(S3, {parse_permutation("(1,2)", 3)});
  CHECK(act.group.degree() == 3);
  CHECK(act.group.order() == 6);
  CHECK(act.map(S3.generators()[0]) == act.generator_images[0]);
  CHECK_THROWS_AS(coset_action(S3, S3.generators()), InputError);

  Group L = load_group(oracle::data("L3_2"));
  std::vector<Permutation> stab;
  for (const auto& g : L.elements()) {
    if (g[0] == 0) stab.push_back(g);
  }
  auto act7 = coset_action(L, stab);
  CHECK(act7.group.degree() == 7);
  CHECK(act7.group.order() == 168);
  // map is a homomorphism
  auto a = L.generators()[0], b = L.generators()[1];
  CHECK(act7.map(a * b) == act7.map(a) * act7.map(b));
}

TEST_CASE("normalizer in the symmetric group") {
  Group A3 = make(3, {"(1,2,3)"});
  CHECK(normalizer_in_sym(A3).order() == 6);
  Group C4 = make(4, {"(1,2,3,4)"});
  CHECK(normalizer_in_sym(C4).order() == 8);
  Group S4 = make(4, {"(1,2)", "(1,2,3,4)"});
  CHECK(normalizer_in_sym(S4).order() == 24);
  CHECK_THROWS_AS(normalizer_in_sym(load_group(oracle::data("L2_11"))), InputError);
}
