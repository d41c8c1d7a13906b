#include "braid/orbit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "braid/count.hpp"
#include "braid/errors.hpp"
#include "braid/io.hpp"

namespace braid {

// ---------------------------------------------------------------------------
// Fingerprints

const WordSchedule& WordSchedule::standard() {
  // Version 1. Single letters at four positions, then four short products.
  static const WordSchedule schedule{
      1, {{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {2, -3}, {1, -2, 3, 4}}};
  return schedule;
}

Fingerprint fingerprint(const GTuple& t, const WordSchedule& schedule) {
  const std::size_t r = t.size();
  Fingerprint out;
  out.reserve(schedule.words.size());
  for (const auto& word : schedule.words) {
    Permutation p(t.degree());
    for (int letter : word) {
      const std::size_t pos = (static_cast<std::size_t>(std::abs(letter)) - 1) % r;
      p = letter > 0 ? p * t[pos] : p * t[pos].inverse();
    }
    out.push_back(p.order());
  }
  return out;
}

std::uint64_t fingerprint_hash(const Fingerprint& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t v : f) {
    h ^= v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

std::uint64_t hash_points(const std::vector<Point>& v) {
  std::uint64_t h = 0x84222325cbf29ce4ULL ^ v.size();
  for (Point x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Canonical labelling of one <t>-orbit. Start points are restricted to the
// points with the smallest vector of cycle lengths, which is a conjugation
// invariant, so every minimizing start point still yields a conjugator.
struct ComponentForm {
  std::vector<Point> form;                 // r * size entries
  std::vector<std::vector<Point>> labels;  // point -> label, per minimizer
};

ComponentForm canonical_component(const GTuple& t, const std::vector<Point>& points,
                                  const std::vector<std::vector<std::uint32_t>>& cycle_len) {
  const std::size_t n = t.degree();
  const std::size_t r = t.size();
  const std::size_t s = points.size();
  auto invariant_less = [&](Point a, Point b) {
    for (std::size_t m = 0; m < r; ++m) {
      if (cycle_len[m][a] != cycle_len[m][b]) return cycle_len[m][a] < cycle_len[m][b];
    }
    return false;
  };
  Point best_start = points.front();
  for (Point x : points) {
    if (invariant_less(x, best_start)) best_start = x;
  }
  ComponentForm out;
  std::vector<Point> label(n, static_cast<Point>(-1));
  std::vector<Point> queue;
  std::vector<Point> form(r * s);
  for (Point p : points) {
    if (invariant_less(best_start, p)) continue;
    for (Point x : points) label[x] = static_cast<Point>(-1);
    queue.assign(1, p);
    label[p] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (std::size_t m = 0; m < r; ++m) {
        const Point y = t[m][queue[k]];
        if (label[y] == static_cast<Point>(-1)) {
          label[y] = static_cast<Point>(queue.size());
          queue.push_back(y);
        }
      }
    }
    for (std::size_t m = 0; m < r; ++m) {
      for (Point x : points) form[m * s + label[x]] = label[t[m][x]];
    }
    if (out.labels.empty() || form < out.form) {
      out.form = form;
      out.labels.clear();
      out.labels.push_back(label);
    } else if (form == out.form) {
      out.labels.push_back(label);
    }
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const GTuple& t) {
  const std::size_t n = t.degree();
  const std::size_t r = t.size();
  std::vector<std::vector<std::uint32_t>> cycle_len(r, std::vector<std::uint32_t>(n));
  for (std::size_t m = 0; m < r; ++m) {
    for (const auto& cyc : t[m].cycles(true)) {
      for (Point x : cyc) cycle_len[m][x] = static_cast<std::uint32_t>(cyc.size());
    }
  }
  auto comps = orbits(n, t.entries);
  CanonicalForm out;
  if (comps.size() == 1) {
    ComponentForm c = canonical_component(t, comps.front(), cycle_len);
    out.transitive = true;
    out.form = std::move(c.form);
    for (auto& lab : c.labels) {
      out.conjugators.push_back(Permutation::from_images_unchecked(std::move(lab)));
    }
  } else {
    std::vector<std::vector<Point>> forms;
    for (const auto& comp : comps) {
      ComponentForm c = canonical_component(t, comp, cycle_len);
      c.form.insert(c.form.begin(), static_cast<Point>(comp.size()));
      forms.push_back(std::move(c.form));
    }
    std::sort(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const auto& f : forms) out.form.insert(out.form.end(), f.begin(), f.end());
  }
  out.hash = hash_points(out.form);
  return out;
}

// ---------------------------------------------------------------------------
// Store

TupleStore::TupleStore(const Group& equivalence, const WordSchedule& schedule)
    : equivalence_(&equivalence), schedule_(&schedule) {}

TupleStore::Key TupleStore::key_of(const GTuple& t) const {
  return Key{fingerprint_hash(fingerprint(t, *schedule_)), canonical_form(t)};
}

std::optional<std::size_t> TupleStore::match(const GTuple& t, const Key& key) const {
  auto outer = buckets_.find(key.fingerprint);
  if (outer == buckets_.end()) return std::nullopt;
  auto inner = outer->second.find(key.canon.hash);
  if (inner == outer->second.end()) return std::nullopt;
  for (std::uint32_t idx : inner->second) {
    const Entry& e = entries_[idx];
    if (e.transitive != key.canon.transitive || e.tuple.size() != t.size()) continue;
    if (e.transitive) {
      const Permutation back = e.to_canonical.inverse();
      for (const auto& sigma : key.canon.conjugators) {
        const Permutation d = sigma * back;
        if (!equivalence_->contains(d)) continue;
        bool same = true;
        for (std::size_t m = 0; m < t.size() && same; ++m) {
          same = conjugate(t[m], d) == e.tuple[m];
        }
        if (same) return idx;
      }
    } else if (find_conjugator(equivalence_->chain(), t.entries, e.tuple.entries)) {
      return idx;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> TupleStore::find(const GTuple& t) const {
  return match(t, key_of(t));
}

TupleStore::Found TupleStore::lookup_or_insert(const GTuple& t, std::size_t orbit,
                                               std::size_t local) {
  Key key = key_of(t);
  if (auto idx = match(t, key)) return {*idx, false};
  Entry e;
  e.tuple = t;
  e.canonical_hash = key.canon.hash;
  e.transitive = key.canon.transitive;
  if (e.transitive) e.to_canonical = key.canon.conjugators.front();
  e.orbit = orbit;
  e.local = local;
  const std::size_t index = entries_.size();
  entries_.push_back(std::move(e));
  buckets_[key.fingerprint][key.canon.hash].push_back(static_cast<std::uint32_t>(index));
  return {index, true};
}

// ---------------------------------------------------------------------------
// Closure

namespace {

class OrbitCapExceeded : public ResourceCapError {
 public:
  OrbitCapExceeded(std::size_t cap, std::vector<GTuple> reps)
      : ResourceCapError("braid orbit exceeds the cap of " + std::to_string(cap) +
                         " representatives"),
        representatives(std::move(reps)) {}
  std::vector<GTuple> representatives;
};

// reps are already in the store, tagged (orbit_tag, 0..reps.size()-1).
Closure close_from(std::vector<GTuple> reps, const std::vector<NamedWord>& words,
                   TupleStore& store, std::size_t orbit_tag, std::size_t cap) {
  std::vector<std::vector<Point>> actions(words.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (std::size_t w = 0; w < words.size(); ++w) {
      GTuple image = apply_word(reps[k], words[w].word);
      auto found = store.lookup_or_insert(image, orbit_tag, reps.size());
      if (found.inserted) {
        if (reps.size() >= cap) throw OrbitCapExceeded(cap, std::move(reps));
        reps.push_back(std::move(image));
      }
      const auto& e = store.entry(found.index);
      if (e.orbit != orbit_tag) {
        throw InvariantError("a braid image landed in a different orbit");
      }
      actions[w].push_back(static_cast<Point>(e.local));
    }
  }
  Closure out;
  out.representatives = std::move(reps);
  for (auto& a : actions) {
    out.actions.push_back(Permutation::from_images(std::move(a)));
  }
  return out;
}

}  // namespace

Closure close_orbit(const GTuple& seed, const std::vector<NamedWord>& words, TupleStore& store,
                    std::size_t orbit_tag, std::size_t cap) {
  auto found = store.lookup_or_insert(seed, orbit_tag, 0);
  if (!found.inserted) throw InputError("seed tuple is already in a stored orbit");
  return close_from({seed}, words, store, orbit_tag, cap);
}

BigInt signature_stabilizer_order(const Group& G, const Group& N, const ClassSignature& sig) {
  const auto& cls = G.classes();
  std::vector<std::vector<std::size_t>> class_perm;
  for (const auto& x : N.generators()) {
    std::vector<std::size_t> img(cls.size());
    for (std::size_t k = 0; k < cls.size(); ++k) {
      img[k] = G.class_of(conjugate(cls[k].representative, x));
    }
    class_perm.push_back(std::move(img));
  }
  std::set<std::vector<std::size_t>> seen{sig.classes};
  std::vector<std::vector<std::size_t>> queue{sig.classes};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : class_perm) {
      std::vector<std::size_t> v = queue[i];
      for (auto& k : v) k = p[k];
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  if (N.order() % queue.size() != 0) throw InvariantError("signature orbit size");
  return N.order() / queue.size();
}

namespace {

struct OrbitContext {
  const Group& G;
  const Group& E;
  ClassSignature sig;
  std::vector<NamedWord> words;
  BigInt count_numerator;  // |E_C| (or |C_G(z)| with a fixed product)
  std::string rng_state;
};

OrbitContext make_context(const Group& G, const ClassSignature& sig,
                          const OrbitOptions& options) {
  if (!sig.block_ordered()) {
    throw InputError("signature " + sig.to_string() + " is not block ordered");
  }
  const Group& E = options.equivalence ? *options.equivalence : G;
  if (E.degree() != G.degree()) throw InputError("equivalence group has a different degree");
  for (const auto& g : G.generators()) {
    if (!E.contains(g)) throw InputError("equivalence group does not contain G");
  }
  OrbitContext ctx{G, E, sig, bp_generators(sig.partition()), G.order(), {}};
  const bool fixed_product = options.product && !options.product->is_identity();
  if (fixed_product && options.equivalence) {
    throw InputError("a fixed product is only supported with inner equivalence");
  }
  if (fixed_product) {
    ctx.count_numerator = G.centralizer(std::span(&*options.product, 1)).order;
  } else if (options.equivalence) {
    ctx.count_numerator = signature_stabilizer_order(G, E, sig);
  }
  return ctx;
}

OrbitRecord finish_record(const OrbitContext& ctx, Closure closure) {
  OrbitRecord rec;
  rec.signature = ctx.sig;
  rec.representatives = std::move(closure.representatives);
  for (std::size_t w = 0; w < ctx.words.size(); ++w) {
    rec.generator_names.push_back(ctx.words[w].name);
    rec.generator_actions.push_back(std::move(closure.actions[w]));
  }
  const int r = static_cast<int>(ctx.sig.size());
  const std::size_t m = rec.representatives.size();
  auto action_of = [&](const std::string& name) -> const Permutation& {
    auto it = std::find(rec.generator_names.begin(), rec.generator_names.end(), name);
    if (it == rec.generator_names.end()) throw InvariantError("missing generator " + name);
    return rec.generator_actions[it - rec.generator_names.begin()];
  };
  for (const auto& pure : pure_generators(r)) {
    rec.pure_names.push_back(pure.name);
    auto it = std::find(rec.generator_names.begin(), rec.generator_names.end(), pure.name);
    if (it != rec.generator_names.end()) {
      rec.pure_actions.push_back(rec.generator_actions[it - rec.generator_names.begin()]);
      continue;
    }
    // Both ends in one block: every letter is a B_P generator.
    Permutation p(m);
    for (int letter : pure.word.letters) {
      const Permutation& a = action_of("Q" + std::to_string(std::abs(letter)));
      p = letter > 0 ? p * a : p * a.inverse();
    }
    rec.pure_actions.push_back(std::move(p));
  }
  const GTuple& seed = rec.representatives.front();
  rec.generated_subgroup_order = generated_order(ctx.G.degree(), seed.entries);
  rec.generates_G = rec.generated_subgroup_order == ctx.G.order();
  rec.centralizer_order = ctx.E.centralizer(seed.entries).order;
  if (ctx.count_numerator % rec.centralizer_order != 0) {
    throw InvariantError("centralizer order does not divide the class stabilizer order");
  }
  rec.tuple_count = ctx.count_numerator / rec.centralizer_order * m;
  return rec;
}

OrbitRecord run_orbit(const OrbitContext& ctx, const GTuple& seed, TupleStore& store,
                      std::size_t orbit_tag, const OrbitOptions& options) {
  try {
    return finish_record(ctx, close_orbit(seed, ctx.words, store, orbit_tag, options.orbit_cap));
  } catch (const OrbitCapExceeded& e) {
    std::string msg = e.what();
    if (options.checkpoint) {
      Checkpoint cp{ctx.G.name(), ctx.sig.to_string(), WordSchedule::standard().version,
                    ctx.rng_state, orbit_tag, e.representatives};
      write_checkpoint(*options.checkpoint, cp);
      msg += "; checkpoint written to " + options.checkpoint->string();
    }
    throw ResourceCapError(msg);
  }
}

GTuple with_product(std::vector<Permutation> entries, const std::optional<Permutation>& z,
                    std::size_t degree) {
  return GTuple(std::move(entries), z ? *z : Permutation(degree));
}

void require_seed(const GTuple& seed, const Group& G) {
  for (const auto& g : seed.entries) {
    if (g.degree() != G.degree() || !G.contains(g)) {
      throw InputError("tuple entry " + g.to_cycle_string() + " is not in " + G.name());
    }
  }
  if (!product_holds(seed)) throw InputError("tuple entries do not multiply to the declared product");
}

}  // namespace

OrbitRecord braid_orbit(const GTuple& seed, const Group& G, const OrbitOptions& options) {
  require_seed(seed, G);
  OrbitOptions opts = options;
  opts.product = seed.declared_product;
  OrbitContext ctx = make_context(G, signature_of(seed, G), opts);
  TupleStore store(ctx.E);
  return run_orbit(ctx, seed, store, 0, opts);
}

// ---------------------------------------------------------------------------
// Sampling

std::optional<GTuple> random_tuple(const Group& G, const ClassSignature& sig, Rng& rng,
                                   const std::optional<Permutation>& product) {
  const auto& cls = G.classes();
  const std::size_t r = sig.size();
  if (r < 2) throw InputError("tuples need at least two entries");
  std::size_t solve = 0;
  for (std::size_t i = 1; i < r; ++i) {
    if (cls[sig.classes[i]].size > cls[sig.classes[solve]].size) solve = i;
  }
  std::vector<Permutation> e(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (i == solve) continue;
    e[i] = conjugate(cls[sig.classes[i]].representative, G.random_element(rng));
  }
  Permutation left(G.degree()), right(G.degree());
  for (std::size_t i = 0; i < solve; ++i) left = left * e[i];
  for (std::size_t i = solve + 1; i < r; ++i) right = right * e[i];
  const Permutation z = product ? *product : G.identity();
  e[solve] = left.inverse() * z * right.inverse();
  const ConjClass& target = cls[sig.classes[solve]];
  if (e[solve].cycle_type() != target.cycle_type) return std::nullopt;
  if (G.class_of(e[solve]) != sig.classes[solve]) return std::nullopt;
  return with_product(std::move(e), product, G.degree());
}

namespace {

std::uint64_t element_set_hash(std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  std::uint64_t h = elems.size();
  for (const auto& g : elems) h = h * 0x100000001b3ULL ^ g.hash();
  return h;
}

// Tuples of E(C_1..C_r; z) with all entries in the finite set H.
std::vector<GTuple> tuples_in_subgroup(const Group& G, const ClassSignature& sig,
                                       const std::vector<Permutation>& H,
                                       const std::optional<Permutation>& product, Rng& rng,
                                       const OrbitOptions& options) {
  const std::size_t r = sig.size();
  std::map<std::size_t, std::vector<Permutation>> by_class;
  for (const auto& h : H) by_class[G.class_of(h)].push_back(h);
  std::vector<const std::vector<Permutation>*> lists;
  for (std::size_t k : sig.classes) {
    auto it = by_class.find(k);
    if (it == by_class.end()) return {};
    lists.push_back(&it->second);
  }
  std::unordered_set<Permutation, PermutationHash> last(lists.back()->begin(),
                                                        lists.back()->end());
  const Permutation z = product ? *product : G.identity();
  std::vector<GTuple> out;
  BigInt combos = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) combos *= lists[i]->size();

  std::vector<Permutation> current(r);
  if (combos <= options.subgroup_enumeration_limit) {
    std::vector<Permutation> prefix(r, G.identity());
    auto dfs = [&](auto&& self, std::size_t i) -> void {
      if (i + 1 == r) {
        Permutation x = prefix[i].inverse() * z;
        if (last.count(x)) {
          current[i] = x;
          out.push_back(with_product(current, product, G.degree()));
        }
        return;
      }
      for (const auto& g : *lists[i]) {
        current[i] = g;
        prefix[i + 1] = prefix[i] * g;
        self(self, i + 1);
      }
    };
    dfs(dfs, 0);
  } else {
    for (std::size_t s = 0; s < options.subgroup_samples; ++s) {
      Permutation p = G.identity();
      for (std::size_t i = 0; i + 1 < r; ++i) {
        current[i] = (*lists[i])[uniform_below(rng, lists[i]->size())];
        p = p * current[i];
      }
      Permutation x = p.inverse() * z;
      if (last.count(x)) {
        current[r - 1] = x;
        out.push_back(with_product(current, product, G.degree()));
      }
    }
  }
  return out;
}

std::vector<Permutation> small_subgroup_elements(const std::vector<Permutation>& gens,
                                                 std::size_t degree) {
  std::vector<Permutation> out{Permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = out[i] * g;
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

// Remembers which small subgroups have been searched.
class SubgroupMiner {
 public:
  SubgroupMiner(const Group& G, const ClassSignature& sig, const OrbitOptions& options)
      : G_(G), sig_(sig), options_(options) {}

  std::vector<GTuple> mine(const GTuple& t, Rng& rng) {
    std::vector<std::vector<Permutation>> candidates;
    candidates.push_back(t.entries);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) candidates.push_back({t[i], t[j]});
    }
    for (std::size_t i = 0; i < t.size(); ++i) candidates.push_back({t[i]});
    std::vector<GTuple> out;
    for (const auto& gens : candidates) {
      if (generated_order(G_.degree(), gens) > options_.subgroup_cutoff) continue;
      auto H = small_subgroup_elements(gens, G_.degree());
      if (!seen_.insert(element_set_hash(H)).second) continue;
      auto found = tuples_in_subgroup(G_, sig_, H, options_.product, rng, options_);
      out.insert(out.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
    }
    return out;
  }

 private:
  const Group& G_;
  const ClassSignature& sig_;
  const OrbitOptions& options_;
  std::unordered_set<std::uint64_t> seen_;
};

std::string rng_state(const Rng& rng) {
  std::ostringstream ss;
  ss << rng;
  return ss.str();
}

}  // namespace

std::vector<GTuple> subgroup_assisted_tuples(const Group& G, const ClassSignature& sig,
                                             const std::vector<GTuple>& known, Rng& rng,
                                             const OrbitOptions& options) {
  SubgroupMiner miner(G, sig, options);
  std::vector<GTuple> out;
  for (const auto& t : known) {
    auto found = miner.mine(t, rng);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Main loop

RunResult all_braid_orbits(const Group& G, const ClassSignature& sig,
                           const OrbitOptions& options) {
  if (sig.size() < 2) throw InputError("signature needs at least two classes");
  OrbitContext ctx = make_context(G, sig, options);
  RunResult result;
  if (options.mode != CountMode::unlimited) {
    result.structure_constant = structure_constant(G, sig, options.product);
    result.remaining = result.structure_constant;
  }
  const BigInt threshold =
      options.mode == CountMode::threshold ? G.order() / G.center_order() : BigInt(0);

  auto done = [&](std::size_t idle) {
    switch (options.mode) {
      case CountMode::exact:
        return *result.remaining == 0;
      case CountMode::threshold:
        return *result.remaining < threshold;
      case CountMode::unlimited:
        return idle >= options.idle_batch_limit;
    }
    return true;
  };

  TupleStore store(ctx.E);
  Rng rng(options.seed);
  SubgroupMiner miner(G, sig, options);
  std::size_t idle = 0;

  // Processes candidates that are not yet in any orbit, larger generated
  // subgroups first. Returns the seeds of new orbits.
  auto process = [&](std::vector<GTuple> candidates, std::size_t limit) {
    TupleStore fresh(ctx.E);
    std::vector<std::pair<BigInt, GTuple>> todo;
    for (auto& t : candidates) {
      if (todo.size() >= limit) break;
      if (store.find(t)) continue;
      if (!fresh.lookup_or_insert(t, 0, 0).inserted) continue;
      BigInt order = generated_order(G.degree(), t.entries);
      todo.emplace_back(std::move(order), std::move(t));
    }
    std::stable_sort(todo.begin(), todo.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<GTuple> seeds;
    for (auto& [order, t] : todo) {
      if (done(idle)) break;
      if (store.find(t)) continue;
      ctx.rng_state = rng_state(rng);
      const std::size_t index = result.orbits.size();
      result.orbits.push_back(run_orbit(ctx, t, store, index, options));
      if (result.remaining) {
        *result.remaining -= result.orbits.back().tuple_count;
        if (*result.remaining < 0) {
          throw InvariantError("orbit tuple counts exceed the structure constant");
        }
      }
      if (options.on_event) {
        OrbitEvent ev;
        ev.kind = OrbitEvent::Kind::orbit;
        ev.orbit_index = index;
        ev.orbit = &result.orbits.back();
        ev.remaining = result.remaining;
        options.on_event(ev);
      }
      seeds.push_back(t);
    }
    return seeds;
  };

  const std::size_t assisted_limit = 64;
  while (!done(idle)) {
    if (options.stop && options.stop()) {
      result.interrupted = true;
      break;
    }
    std::vector<GTuple> batch;
    for (std::size_t attempt = 0;
         attempt < options.attempts_per_batch && batch.size() < options.batch; ++attempt) {
      if (auto t = random_tuple(G, sig, rng, options.product)) batch.push_back(std::move(*t));
    }
    ++result.batches;
    if (options.on_event) {
      OrbitEvent ev;
      ev.kind = OrbitEvent::Kind::batch;
      ev.batch_size = batch.size();
      ev.remaining = result.remaining;
      options.on_event(ev);
    }
    const std::size_t before = result.orbits.size();
    auto seeds = process(std::move(batch), options.batch);
    while (!seeds.empty() && !done(idle)) {
      std::vector<GTuple> assisted;
      for (const auto& s : seeds) {
        auto found = miner.mine(s, rng);
        assisted.insert(assisted.end(), std::make_move_iterator(found.begin()),
                        std::make_move_iterator(found.end()));
      }
      seeds = process(std::move(assisted), assisted_limit);
    }
    idle = result.orbits.size() == before ? idle + 1 : 0;
  }
  result.complete = options.mode == CountMode::exact && result.remaining && *result.remaining == 0;
  return result;
}

// ---------------------------------------------------------------------------
// Checkpoints

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write checkpoint " + path.string());
  out << "# braid orbit checkpoint\n";
  out << "group " << cp.group << '\n';
  out << "signature " << cp.signature << '\n';
  out << "schedule " << cp.schedule_version << '\n';
  out << "rng " << cp.rng_state << '\n';
  out << "orbit " << cp.orbit_index << '\n';
  out << "representatives " << cp.representatives.size() << '\n';
  for (const auto& t : cp.representatives) {
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (m) out << ';';
      out << t[m].to_image_string();
    }
    out << '\n';
  }
}

Checkpoint read_checkpoint(const std::filesystem::path& path, std::size_t degree) {
  std::istringstream in(read_text(path));
  Checkpoint cp;
  std::string line;
  std::size_t expected = 0;
  bool in_body = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (in_body) {
      std::vector<Permutation> entries;
      std::stringstream parts(line);
      std::string part;
      while (std::getline(parts, part, ';')) entries.push_back(parse_permutation(part, degree));
      cp.representatives.push_back(GTuple(std::move(entries)));
      continue;
    }
    const auto space = line.find(' ');
    const std::string key = line.substr(0, space);
    const std::string value = space == std::string::npos ? "" : line.substr(space + 1);
    if (key == "group") {
      cp.group = value;
    } else if (key == "signature") {
      cp.signature = value;
    } else if (key == "schedule") {
      cp.schedule_version = std::stoi(value);
    } else if (key == "rng") {
      cp.rng_state = value;
    } else if (key == "orbit") {
      cp.orbit_index = std::stoul(value);
    } else if (key == "representatives") {
      expected = std::stoul(value);
      in_body = true;
    } else {
      throw InputError("unknown checkpoint line \"" + line + "\"");
    }
  }
  if (cp.representatives.size() != expected || expected == 0) {
    throw InputError("checkpoint " + path.string() + " is truncated");
  }
  return cp;
}

OrbitRecord resume_orbit(const std::filesystem::path& path, const Group& G,
                         const OrbitOptions& options) {
  Checkpoint cp = read_checkpoint(path, G.degree());
  if (cp.schedule_version != WordSchedule::standard().version) {
    throw InputError("checkpoint uses word schedule " + std::to_string(cp.schedule_version));
  }
  if (!cp.group.empty() && !G.name().empty() && cp.group != G.name()) {
    throw InputError("checkpoint belongs to group " + cp.group);
  }
  OrbitOptions opts = options;
  for (auto& t : cp.representatives) {
    if (opts.product) t.declared_product = *opts.product;
    require_seed(t, G);
  }
  OrbitContext ctx = make_context(G, signature_of(cp.representatives.front(), G), opts);
  if (ctx.sig.to_string() != cp.signature) {
    throw InputError("checkpoint signature " + cp.signature + " does not match its tuples");
  }
  TupleStore store(ctx.E);
  for (std::size_t i = 0; i < cp.representatives.size(); ++i) {
    if (!store.lookup_or_insert(cp.representatives[i], 0, i).inserted) {
      throw InputError("checkpoint lists equivalent representatives");
    }
  }
  try {
    return finish_record(ctx, close_from(std::move(cp.representatives), ctx.words, store, 0,
                                         opts.orbit_cap));
  } catch (const OrbitCapExceeded& e) {
    throw ResourceCapError(e.what());
  }
}

std::vector<std::vector<std::size_t>> pure_suborbits(const OrbitRecord& rec) {
  auto parts = orbits(rec.length(), rec.pure_actions);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : parts) {
    std::vector<std::size_t> v(p.begin(), p.end());
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braid
