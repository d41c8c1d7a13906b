#include "braid/braid.hpp"

#include <algorithm>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

GTuple::GTuple(std::vector<Permutation> e) : entries(std::move(e)) {
  if (entries.empty()) throw InputError("empty tuple");
  declared_product = Permutation(entries.front().degree());
}

GTuple::GTuple(std::vector<Permutation> e, Permutation product)
    : entries(std::move(e)), declared_product(std::move(product)) {}

Permutation product(std::span<const Permutation> entries, std::size_t degree) {
  Permutation p(degree);
  for (const auto& g : entries) p = p * g;
  return p;
}

bool product_holds(const GTuple& t) {
  return product(t.entries, t.degree()) == t.declared_product;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters[k]);
  }
  return out;
}

BraidWord BraidWord::parse(std::string_view text) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad braid letter \"" + tok + "\"");
    }
    if (used != tok.size() || v == 0) throw InputError("bad braid letter \"" + tok + "\"");
    w.letters.push_back(v);
  }
  return w;
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

namespace {

void check_index(const GTuple& t, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= t.size()) {
    throw InputError("braid generator index " + std::to_string(i) +
                     " out of range for a tuple of length " + std::to_string(t.size()));
  }
}

void q_in_place(std::vector<Permutation>& e, int i) {
  Permutation a = std::move(e[i - 1]);
  Permutation b = std::move(e[i]);
  e[i] = conjugate(a, b);
  e[i - 1] = std::move(b);
}

void q_inverse_in_place(std::vector<Permutation>& e, int i) {
  Permutation a = std::move(e[i - 1]);
  Permutation b = std::move(e[i]);
  e[i - 1] = conjugate(b, a.inverse());
  e[i] = std::move(a);
}

}  // namespace

GTuple apply_q(const GTuple& t, int i) {
  check_index(t, i);
  GTuple out = t;
  q_in_place(out.entries, i);
  return out;
}

GTuple apply_q_inverse(const GTuple& t, int i) {
  check_index(t, i);
  GTuple out = t;
  q_inverse_in_place(out.entries, i);
  return out;
}

GTuple apply_word(const GTuple& t, const BraidWord& w) {
  GTuple out = t;
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    check_index(out, i);
    if (letter > 0) {
      q_in_place(out.entries, i);
    } else {
      q_inverse_in_place(out.entries, i);
    }
  }
  return out;
}

namespace {

void check_pair(int i, int j, int r) {
  if (!(1 <= i && i < j && j <= r)) {
    throw InputError("pure braid generator needs 1 <= i < j <= r, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " r=" + std::to_string(r));
  }
}

}  // namespace

BraidWord pure_generator_word(int i, int j, int r) {
  check_pair(i, j, r);
  BraidWord w;
  for (int k = j - 1; k > i; --k) w.letters.push_back(k);
  w.letters.push_back(i);
  w.letters.push_back(i);
  for (int k = i + 1; k < j; ++k) w.letters.push_back(-k);
  return w;
}

BraidWord pure_generator_word_alt(int i, int j, int r) {
  check_pair(i, j, r);
  BraidWord w;
  for (int k = i; k <= j - 2; ++k) w.letters.push_back(-k);
  w.letters.push_back(j - 1);
  w.letters.push_back(j - 1);
  for (int k = j - 2; k >= i; --k) w.letters.push_back(k);
  return w;
}

Permutation position_permutation(const BraidWord& w, int r) {
  // Track where each original position currently sits.
  std::vector<Point> at(r);  // at[slot] = original position
  for (int p = 0; p < r; ++p) at[p] = static_cast<Point>(p);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= r) throw InputError("braid letter out of range");
    std::swap(at[i - 1], at[i]);
  }
  std::vector<Point> image(r);
  for (int slot = 0; slot < r; ++slot) image[at[slot]] = static_cast<Point>(slot);
  return Permutation::from_images(std::move(image));
}

std::vector<std::size_t> ClassSignature::partition() const {
  std::vector<std::size_t> parts;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (k == 0 || classes[k] != classes[k - 1]) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return parts;
}

bool ClassSignature::block_ordered() const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 2; j < classes.size(); ++j) {
      if (classes[i] == classes[j] && classes[j - 1] != classes[i]) return false;
    }
  }
  return true;
}

std::string ClassSignature::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out += ',';
    out += labels[k];
  }
  return out + ")";
}

ClassSignature make_signature(const Group& G, std::vector<std::size_t> classes) {
  ClassSignature sig;
  const auto& cls = G.classes();
  for (std::size_t k : classes) {
    if (k >= cls.size()) throw InputError("class index out of range");
    sig.labels.push_back(cls[k].label);
  }
  sig.classes = std::move(classes);
  return sig;
}

ClassSignature signature_of(const GTuple& t, const Group& G) {
  std::vector<std::size_t> classes;
  for (const auto& g : t.entries) classes.push_back(G.class_of(g));
  return make_signature(G, std::move(classes));
}

std::pair<GTuple, BraidWord> reorder_to_signature(const GTuple& t, const Group& G) {
  std::vector<std::size_t> key;
  for (const auto& g : t.entries) key.push_back(G.class_of(g));
  GTuple out = t;
  BraidWord word;
  for (std::size_t k = 1; k < key.size(); ++k) {
    for (std::size_t j = k; j > 0 && key[j - 1] > key[j]; --j) {
      q_in_place(out.entries, static_cast<int>(j));
      std::swap(key[j - 1], key[j]);
      word.letters.push_back(static_cast<int>(j));
    }
  }
  return {out, word};
}

std::vector<NamedWord> bp_generators(const std::vector<std::size_t>& partition) {
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b] == 0) throw InputError("empty block in partition");
    block.insert(block.end(), partition[b], b);
  }
  const int r = static_cast<int>(block.size());
  std::vector<NamedWord> out;
  for (int i = 1; i < r; ++i) {
    if (block[i - 1] == block[i]) out.push_back({"Q" + std::to_string(i), BraidWord{{i}}});
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      if (block[i - 1] != block[j - 1]) {
        out.push_back({"Q" + std::to_string(i) + "," + std::to_string(j),
                       pure_generator_word(i, j, r)});
      }
    }
  }
  return out;
}

std::vector<NamedWord> pure_generators(int r) {
  std::vector<NamedWord> out;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      out.push_back({"Q" + std::to_string(i) + "," + std::to_string(j),
                     pure_generator_word(i, j, r)});
    }
  }
  return out;
}

Coalesced coalesce(const GTuple& t) {
  if (t.size() < 3) throw InputError("coalescing needs a tuple of length at least 3");
  Coalesced out;
  out.tuple.entries.assign(t.entries.begin(), t.entries.end() - 2);
  Permutation merged = t.entries[t.size() - 2] * t.entries.back();
  out.admissible = !merged.is_identity();
  out.tuple.entries.push_back(std::move(merged));
  out.tuple.declared_product = t.declared_product;
  return out;
}

}  // namespace braid
