#ifndef BRAID_PERM_HPP
#define BRAID_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braid {

using Point = std::uint32_t;

// A bijection of {0..n-1}. Text forms are 1-based.
//
// Convention: permutations act on the right and products read left to
// right, so (p * q)(x) = q(p(x)) and g^h = h^-1 g h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  // Validates that `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);
  // No validation; the caller guarantees a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    return Permutation(std::move(images), 0);
  }
  // 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  std::uint64_t order() const;
  // Cycle lengths including fixed points, sorted descending.
  std::vector<std::size_t> cycle_type() const;
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  std::size_t num_cycles() const;

  // "(1,2,3)(4,5)"; identity is "()".
  std::string to_cycle_string() const;
  // "[2,3,1,5,4]"
  std::string to_image_string() const;

  std::size_t hash() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// x -> q(p(x)). Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
/// h^-1 g h.
Permutation conjugate(const Permutation& g, const Permutation& h);
/// Degree minus the number of cycles (fixed points count as cycles).
std::size_t index(const Permutation& p);

// Parses "(1,2,3)(4,5)", "()" or "[2,3,1]". A degree of 0 means "infer":
// the image-list length, or the largest point mentioned in cycle form.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

// Splits "a,b,c" at top-level commas (commas inside () or [] are kept).
std::vector<std::string> split_top_level(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace braid

#endif
