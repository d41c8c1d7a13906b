#include "braid/count.hpp"

#include <algorithm>
#include <numeric>

#include "braid/errors.hpp"

namespace braid {

ClassVector class_product_counts(const Group& G, std::size_t A, std::size_t B) {
  const auto& cls = G.classes();
  ClassVector out(cls.size(), 0);
  const auto elems = G.class_elements(A);
  for (std::size_t d = 0; d < cls.size(); ++d) {
    const Permutation& rep = cls[d].representative;
    for (const auto& a : elems) {
      if (G.class_of(a.inverse() * rep) == B) ++out[d];
    }
  }
  return out;
}

namespace {

// N_k(D) = #{(g_1..g_k) : g_i in C_i, g_1...g_k = d} for fixed d in D.
// N_{k+1}(D') = sum over y in C_{k+1} of N_k(class(d' y^-1)).
ClassVector fold(const Group& G, const std::vector<std::size_t>& classes, std::size_t upto) {
  const auto& cls = G.classes();
  ClassVector v(cls.size(), 0);
  v[classes[0]] = 1;
  for (std::size_t k = 1; k < upto; ++k) {
    ClassVector next(cls.size(), 0);
    const auto elems = G.class_elements(classes[k]);
    std::vector<Permutation> inverses;
    inverses.reserve(elems.size());
    for (const auto& y : elems) inverses.push_back(y.inverse());
    for (std::size_t d = 0; d < cls.size(); ++d) {
      const Permutation& rep = cls[d].representative;
      BigInt sum = 0;
      for (const auto& yinv : inverses) {
        const std::size_t c = G.class_of(rep * yinv);
        if (v[c] != 0) sum += v[c];
      }
      next[d] = sum;
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace

BigInt structure_constant(const Group& G, const std::vector<std::size_t>& classes,
                          const std::optional<Permutation>& product) {
  const auto& cls = G.classes();
  if (classes.size() < 2) throw InputError("structure constant needs at least two classes");
  for (std::size_t k : classes) {
    if (k >= cls.size()) throw InputError("class index out of range");
  }
  if (product && !product->is_identity()) {
    const std::size_t z = G.class_of(*product);
    return fold(G, classes, classes.size())[z];
  }
  // The product-one count does not depend on the order of the classes, so
  // the two largest are placed where they are never enumerated.
  std::vector<std::size_t> order = classes;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cls[a].size > cls[b].size; });
  std::vector<std::size_t> arranged;
  arranged.push_back(order[0]);
  arranged.insert(arranged.end(), order.begin() + 2, order.end());
  arranged.push_back(order[1]);
  const std::size_t last = arranged.back();
  ClassVector v = fold(G, arranged, arranged.size() - 1);
  return cls[last].size * v[cls[last].inverse_class];
}

BigInt structure_constant(const Group& G, const ClassSignature& sig,
                          const std::optional<Permutation>& product) {
  return structure_constant(G, sig.classes, product);
}

BigInt inn_orbit_size(const Group& G, const GTuple& t) {
  return G.order() / G.centralizer(t.entries).order;
}

}  // namespace braid
