#include "braid/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) {
      throw InputError("image list is not a bijection");
    }
    seen[x] = 1;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point a = cycle[k];
      Point b = cycle[(k + 1) % cycle.size()];
      if (a >= degree || b >= degree) {
        throw InputError("cycle point " + std::to_string(std::max(a, b) + 1) +
                         " exceeds degree " + std::to_string(degree));
      }
      if (used[a]) {
        throw InputError("point " + std::to_string(a + 1) +
                         " appears twice in cycle notation");
      }
      used[a] = 1;
      p.images_[a] = b;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv), 0);
}

Permutation Permutation::pow(long long k) const {
  const std::size_t n = images_.size();
  std::vector<Point> out(n);
  std::vector<char> done(n, 0);
  std::vector<Point> cyc;
  for (Point s = 0; s < n; ++s) {
    if (done[s]) continue;
    cyc.clear();
    for (Point x = s; !done[x]; x = images_[x]) {
      done[x] = 1;
      cyc.push_back(x);
    }
    const long long len = static_cast<long long>(cyc.size());
    const long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i) {
      out[cyc[i]] = cyc[(i + shift) % len];
    }
  }
  return Permutation(std::move(out), 0);
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) {
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  }
  return ord;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  const std::size_t n = images_.size();
  std::vector<std::size_t> lens;
  std::vector<char> done(n, 0);
  for (Point s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::size_t len = 0;
    for (Point x = s; !done[x]; x = images_[x]) {
      done[x] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<std::vector<Point>> Permutation::cycles(bool include_fixed) const {
  const std::size_t n = images_.size();
  std::vector<std::vector<Point>> out;
  std::vector<char> done(n, 0);
  for (Point s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<Point> cyc;
    for (Point x = s; !done[x]; x = images_[x]) {
      done[x] = 1;
      cyc.push_back(x);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t Permutation::num_cycles() const {
  const std::size_t n = images_.size();
  std::vector<char> done(n, 0);
  std::size_t count = 0;
  for (Point s = 0; s < n; ++s) {
    if (done[s]) continue;
    ++count;
    for (Point x = s; !done[x]; x = images_[x]) done[x] = 1;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  auto cyc = cycles(false);
  if (cyc.empty()) return "()";
  std::string out;
  for (const auto& c : cyc) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string Permutation::to_image_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  out += ']';
  return out;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images_.size();
  for (Point x : images_) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InputError("degree mismatch: " + std::to_string(p.degree()) +
                     " vs " + std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), 0);
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation conjugate(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw InputError("degree mismatch in conjugate");
  }
  // (h^-1 g h)(h(x)) = h(g(x))
  std::vector<Point> out(g.degree());
  for (Point x = 0; x < out.size(); ++x) out[h[x]] = h[g[x]];
  return Permutation::from_images_unchecked(std::move(out));
}

std::size_t index(const Permutation& p) { return p.degree() - p.num_cycles(); }

namespace {

void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Point read_point(std::string_view s, std::size_t& pos) {
  skip_space(s, pos);
  std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    if (value > 0xFFFFFFu) throw InputError("point value too large");
    ++pos;
  }
  if (pos == start) {
    throw InputError("expected a point number in \"" + std::string(s) + "\"");
  }
  if (value == 0) throw InputError("points are numbered from 1");
  skip_space(s, pos);
  return static_cast<Point>(value - 1);
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw InputError("empty permutation string");

  if (text[pos] == '[') {
    ++pos;
    std::vector<Point> images;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
    } else {
      while (true) {
        images.push_back(read_point(text, pos));
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          break;
        }
        throw InputError("malformed image list \"" + std::string(text) + "\"");
      }
    }
    skip_space(text, pos);
    if (pos != text.size()) {
      throw InputError("trailing characters in \"" + std::string(text) + "\"");
    }
    if (degree != 0 && images.size() != degree) {
      throw InputError("image list has length " + std::to_string(images.size()) +
                       ", expected " + std::to_string(degree));
    }
    return Permutation::from_images(std::move(images));
  }

  std::vector<std::vector<Point>> cycles;
  Point max_point = 0;
  bool any_point = false;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InputError("malformed cycle notation \"" + std::string(text) + "\"");
    }
    ++pos;
    skip_space(text, pos);
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
    } else {
      while (true) {
        Point x = read_point(text, pos);
        cycle.push_back(x);
        max_point = std::max(max_point, x);
        any_point = true;
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw InputError("malformed cycle notation \"" + std::string(text) + "\"");
      }
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space(text, pos);
  }
  if (degree == 0) degree = any_point ? max_point + 1 : 0;
  if (any_point && max_point >= degree) {
    throw InputError("point " + std::to_string(max_point + 1) +
                     " exceeds degree " + std::to_string(degree));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw InputError("unbalanced brackets in \"" + std::string(text) + "\"");
    if (ch == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (depth != 0) throw InputError("unbalanced brackets in \"" + std::string(text) + "\"");
  parts.push_back(current);
  for (auto& part : parts) {
    auto b = part.find_first_not_of(" \t\r\n");
    auto e = part.find_last_not_of(" \t\r\n");
    part = b == std::string::npos ? std::string() : part.substr(b, e - b + 1);
  }
  return parts;
}

}  // namespace braid
