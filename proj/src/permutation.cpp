#include "permorbit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permorbit {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q, const char* what) {
  if (p.degree() != q.degree()) {
    throw PermutationError(std::string(what) + ": degree mismatch (" + std::to_string(p.degree()) +
                           " vs " + std::to_string(q.degree()) + ")");
  }
}

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  std::vector<Permutation> parse_list() {
    std::vector<Permutation> out;
    skip_space();
    if (at_end()) return out;
    while (true) {
      out.push_back(parse_one());
      skip_space();
      if (at_end()) break;
      expect(',');
    }
    return out;
  }

  Permutation parse_single() {
    skip_space();
    Permutation p = parse_one();
    skip_space();
    if (!at_end()) fail("trailing characters");
    return p;
  }

 private:
  Permutation parse_one() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);
    skip_space();
    if (at_end() || peek() != '(') fail("expected '('");
    while (!at_end() && peek() == '(') {
      ++pos_;
      skip_space();
      if (!at_end() && peek() == ')') {
        ++pos_;
        skip_space();
        continue;
      }
      std::vector<Point> cycle;
      while (true) {
        Point pt = parse_point();
        if (used[pt]) fail("point " + std::to_string(pt + 1) + " appears twice");
        used[pt] = true;
        cycle.push_back(pt);
        skip_space();
        if (at_end()) fail("unterminated cycle");
        if (peek() == ')') {
          ++pos_;
          break;
        }
        expect(',');
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_space();
    }
    return Permutation(std::move(images));
  }

  Point parse_point() {
    skip_space();
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > (1ULL << 31)) fail("point out of range");
      ++pos_;
    }
    if (pos_ == start) fail("expected a point");
    if (value < 1 || value > degree_) {
      fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree_));
    }
    return static_cast<Point>(value - 1);
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw PermutationError("cycle notation: " + msg + " at offset " + std::to_string(pos_) +
                           " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw PermutationError("image sequence is not a permutation of 0.." +
                             std::to_string(images_.size() ? images_.size() - 1 : 0));
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (p >= degree) throw PermutationError("cycle point out of range");
      if (used[p]) throw PermutationError("cycles are not disjoint");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Point Permutation::image(Point p) const {
  if (p >= images_.size()) throw PermutationError("point out of domain");
  return images_[p];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

int Permutation::sign() const {
  std::size_t even_cycles = 0;
  for (std::size_t len : cycle_type()) {
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[static_cast<Point>(i)]];
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& g, const Permutation& s) {
  require_same_degree(g, s, "conjugate");
  // s^-1 g s maps w^s to (w^g)^s.
  std::vector<Point> out(g.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[s[static_cast<Point>(i)]] = s[g[static_cast<Point>(i)]];
  }
  return Permutation(std::move(out));
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g.inverse() * h.inverse() * g * h;
}

Permutation power(const Permutation& g, std::int64_t exponent) {
  Permutation base = exponent < 0 ? g.inverse() : g;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(g.degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse_single();
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse_list();
}

std::string to_string(std::span<const Permutation> perms) {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += ',';
    out += perms[i].to_string();
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace permorbit
