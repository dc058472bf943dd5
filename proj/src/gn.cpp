#include "permorbit/gn.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "permorbit/constructors.hpp"

namespace permorbit::gn {

namespace {

inline std::uint32_t parity(std::uint32_t v) noexcept { return static_cast<std::uint32_t>(std::popcount(v)) & 1U; }

}  // namespace

GnGroup::GnGroup(unsigned n) : n_(n) {
  if (n < kMinN || n > kMaxN) {
    throw std::out_of_range("G_n is supported for 1 <= n <= 3, got n = " + std::to_string(n));
  }
  k_ = (1U << n) + 1;
  x_mask_ = (1U << k_) - 1;
  a_pairs_ = 0;
  b_pairs_ = 0;
  for (unsigned t = 0; t + 1 < k_; ++t) {
    if (t % 2 == 0) {
      a_pairs_ |= 1U << t;
    } else {
      b_pairs_ |= 1U << t;
    }
  }
  b_squares_ = 1U | (1U << (k_ - 1));
}

GnElement GnGroup::x(unsigned i) const {
  if (i < 1 || i > k_) throw std::out_of_range("x_i: index out of range");
  return 1U << (i - 1);
}

std::vector<GnElement> GnGroup::generators() const {
  std::vector<GnElement> out;
  for (unsigned i = 1; i <= k_; ++i) out.push_back(x(i));
  out.push_back(a());
  out.push_back(b());
  return out;
}

GnElement GnGroup::multiply(GnElement u, GnElement v) const noexcept {
  // Collecting u*v moves each x_t of v to the left past the x_{t+1} of u,
  // which costs the commutator of that adjacent pair; equal x_t meet and
  // square to b at the two ends.
  const std::uint32_t ux = u & x_mask_, vx = v & x_mask_;
  const std::uint32_t cross = vx & (ux >> 1);
  const std::uint32_t a_bit = parity(cross & a_pairs_);
  const std::uint32_t b_bit = parity(cross & b_pairs_) ^ parity(ux & vx & b_squares_);
  return ((u ^ v) & x_mask_) | (((u ^ v) & ~x_mask_) ^ (a_bit << k_) ^ (b_bit << (k_ + 1)));
}

GnElement GnGroup::inverse(GnElement u) const noexcept {
  // Right multiplication by a central element only flips the a, b bits.
  GnElement w = u & x_mask_;
  return w ^ multiply(u, w);
}

GnElement GnGroup::conjugate(GnElement u, GnElement s) const noexcept {
  return multiply(multiply(inverse(s), u), s);
}

std::string GnGroup::to_string(GnElement u) const {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  for (unsigned i = 1; i <= k_; ++i) {
    if (u & x(i)) append("x" + std::to_string(i));
  }
  if (u & a()) append("a");
  if (u & b()) append("b");
  return out.empty() ? "1" : out;
}

std::vector<GnElement> GnGroup::centre() const {
  std::vector<GnElement> out;
  const auto gens = generators();
  for (GnElement u = 0; u < order(); ++u) {
    if (std::all_of(gens.begin(), gens.end(), [&](GnElement s) { return multiply(u, s) == multiply(s, u); })) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<GnElement> GnGroup::derived() const {
  std::set<GnElement> commutators;
  for (GnElement u = 0; u < order(); ++u) {
    for (GnElement v = 0; v < order(); ++v) {
      commutators.insert(multiply(multiply(inverse(u), inverse(v)), multiply(u, v)));
    }
  }
  return closure(std::vector<GnElement>(commutators.begin(), commutators.end()));
}

std::vector<GnElement> GnGroup::closure(const std::vector<GnElement>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<GnElement> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (GnElement s : gens) {
      GnElement y = multiply(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroupPtr GnGroup::finite(std::vector<GnElement>* labels) const {
  std::vector<GnElement> xs;
  for (unsigned i = 1; i <= k_; ++i) xs.push_back(x(i));
  auto mul = [this](GnElement u, GnElement v) { return multiply(u, v); };
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::generate<GnElement>(identity(), xs, mul, FiniteGroup::kMaxOrder, labels));
}

std::vector<std::vector<GnElement>> stabilizer_class(const GnGroup& g) {
  const GnElement h = g.x(1U << g.n());
  std::set<std::vector<GnElement>> conjugates;
  for (GnElement s = 0; s < g.order(); ++s) {
    GnElement c = g.conjugate(h, s);
    conjugates.insert(std::vector<GnElement>{std::min<GnElement>(0, c), std::max<GnElement>(0, c)});
  }
  return {conjugates.begin(), conjugates.end()};
}

PermutationGroup coset_representation(const GnGroup& g) {
  std::vector<GnElement> labels;
  auto fg = g.finite(&labels);
  const GnElement h = g.x(1U << g.n());
  const auto pos = std::find(labels.begin(), labels.end(), h) - labels.begin();
  return coset_action(fg, {0, static_cast<Elem>(pos)}).image;
}

GnMap extend_generator_images(const GnGroup& g, const std::vector<GnElement>& x_images, GnElement a_image,
                              GnElement b_image) {
  if (x_images.size() != g.k()) throw std::invalid_argument("extend_generator_images: need one image per x_i");
  GnMap out;
  out.images.resize(g.order());
  for (GnElement u = 0; u < g.order(); ++u) {
    GnElement img = GnGroup::identity();
    for (unsigned i = 1; i <= g.k(); ++i) {
      if (u & g.x(i)) img = g.multiply(img, x_images[i - 1]);
    }
    if (u & g.a()) img = g.multiply(img, a_image);
    if (u & g.b()) img = g.multiply(img, b_image);
    out.images[u] = img;
  }
  out.homomorphism = true;
  for (GnElement u = 0; u < g.order() && out.homomorphism; ++u) {
    for (GnElement s : g.generators()) {
      if (out.images[g.multiply(u, s)] != g.multiply(out.images[u], out.images[s])) {
        out.homomorphism = false;
        break;
      }
    }
  }
  std::vector<char> hit(g.order(), 0);
  out.bijective = true;
  for (GnElement img : out.images) {
    if (hit[img]) out.bijective = false;
    hit[img] = 1;
  }
  return out;
}

GnMap alpha_n(const GnGroup& g) {
  std::vector<GnElement> xs;
  const unsigned m = 1U << g.n();
  for (unsigned i = 1; i <= g.k(); ++i) xs.push_back(i == m ? g.multiply(g.x(m), g.x(m + 1)) : g.x(i));
  return extend_generator_images(g, xs, g.a(), g.b());
}

GnElement apply_central(const GnGroup& g, const CentralHomCode& f, GnElement u) noexcept {
  const std::uint32_t x = g.x_bits(u);
  return (parity(x & f.a_mask) << g.k()) | (parity(x & f.b_mask) << (g.k() + 1));
}

namespace {

/// Bit index za + 2 zb of a central element.
inline unsigned centre_slot(const GnGroup& g, GnElement z) noexcept {
  return ((z >> g.k()) & 1U) | (((z >> (g.k() + 1)) & 1U) << 1);
}

bool preserves_class(const GnGroup& g, const CentralHomCode& f, GnElement h,
                     const std::vector<std::vector<GnElement>>& cls) {
  GnElement image = g.multiply(h, apply_central(g, f, h));
  std::vector<GnElement> sub{0, image};
  return std::binary_search(cls.begin(), cls.end(), sub);
}

/// ORs the contribution of the codes [begin, end) into masks over x-parts.
/// The code c packs a_mask in its low k bits and b_mask above them.
void accumulate(const GnGroup& g, std::uint64_t begin, std::uint64_t end, GnElement h,
                const std::vector<std::vector<GnElement>>& cls, std::vector<std::uint8_t>& masks,
                std::uint64_t& accepted) {
  const std::uint32_t x_count = 1U << g.k();
  const std::uint64_t low = (1ULL << g.k()) - 1;
  for (std::uint64_t c = begin; c < end; ++c) {
    CentralHomCode f{static_cast<std::uint32_t>(c & low), static_cast<std::uint32_t>(c >> g.k())};
    if (!preserves_class(g, f, h, cls)) continue;
    ++accepted;
    for (std::uint32_t x = 0; x < x_count; ++x) {
      masks[x] |= static_cast<std::uint8_t>(1U << centre_slot(g, apply_central(g, f, x)));
    }
  }
}

/// f(u) only depends on the x-part, so masks are computed per x-part first.
std::vector<std::uint8_t> expand(const GnGroup& g, const std::vector<std::uint8_t>& by_x) {
  std::vector<std::uint8_t> out(g.order());
  for (GnElement u = 0; u < g.order(); ++u) out[u] = by_x[g.x_bits(u)];
  return out;
}

std::vector<std::uint8_t> masks_serial(const GnGroup& g, std::uint64_t& accepted) {
  const auto cls = stabilizer_class(g);
  std::vector<std::uint8_t> by_x(1U << g.k(), 0);
  accepted = 0;
  accumulate(g, 0, 1ULL << (2 * g.k()), g.x(1U << g.n()), cls, by_x, accepted);
  return expand(g, by_x);
}

std::vector<std::uint8_t> masks_parallel(const GnGroup& g, std::uint64_t& accepted) {
  const auto cls = stabilizer_class(g);
  const std::uint64_t total = 1ULL << (2 * g.k());
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<std::uint8_t> by_x(1U << g.k(), 0);
  std::uint64_t count = 0;
  const GnElement h = g.x(1U << g.n());
#pragma omp parallel
  {
    std::vector<std::uint8_t> local(by_x.size(), 0);
    std::uint64_t local_count = 0;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      accumulate(g, begin, std::min(total, begin + chunk), h, cls, local, local_count);
    }
#pragma omp critical
    {
      for (std::size_t i = 0; i < by_x.size(); ++i) by_x[i] |= local[i];
      count += local_count;
    }
  }
  accepted = count;
  return expand(g, by_x);
}

}  // namespace

std::vector<std::uint8_t> orbit_masks_serial(const GnGroup& g) {
  std::uint64_t accepted = 0;
  return masks_serial(g, accepted);
}

std::vector<std::uint8_t> orbit_masks_parallel(const GnGroup& g) {
  std::uint64_t accepted = 0;
  return masks_parallel(g, accepted);
}

GnOrbitSummary maol_perm_summary(const GnGroup& g, bool parallel) {
  GnOrbitSummary out;
  out.central_automorphisms = 1ULL << (2 * g.k());
  auto masks = parallel ? masks_parallel(g, out.preserving_class) : masks_serial(g, out.preserving_class);
  std::map<std::uint32_t, std::uint32_t> by_length;
  for (std::uint8_t m : masks) {
    auto len = static_cast<std::uint32_t>(std::popcount(m));
    out.max_orbit_length = std::max(out.max_orbit_length, len);
    ++by_length[len];
  }
  out.elements_by_orbit_length.assign(by_length.begin(), by_length.end());
  return out;
}

std::uint32_t maol_perm(unsigned n, bool parallel) { return maol_perm_summary(GnGroup(n), parallel).max_orbit_length; }

VerificationReport verify_family_member(unsigned n, const AutOptions& options) {
  Stopwatch clock;
  GnGroup g(n);
  const std::string name = "G_" + std::to_string(n);
  VerificationReport report(name);
  report.expect_equal("|" + name + "| = 2^" + std::to_string(g.k() + 2), std::uint64_t{1} << (g.k() + 2),
                      g.closure(g.generators()).size());
  const std::vector<GnElement> ab{0, g.a(), g.b(), g.a() | g.b()};
  report.expect_true("centre of " + name + " is <a, b>", g.centre() == ab, "order " + std::to_string(g.centre().size()));
  report.expect_true("derived subgroup of " + name + " is <a, b>", g.derived() == ab);

  const GnElement h = g.x(1U << n);
  std::vector<std::vector<GnElement>> expected_class;
  for (GnElement z : ab) expected_class.push_back({0, g.multiply(h, z)});
  std::sort(expected_class.begin(), expected_class.end());
  const auto cls = stabilizer_class(g);
  nlohmann::json class_words = nlohmann::json::array();
  for (const auto& s : cls) class_words.push_back(g.to_string(s[1]));
  report.expect_true("conjugates of H_n are <h z> for z in <a, b>", cls == expected_class, class_words.dump(),
                     cls == expected_class ? nlohmann::json() : class_words);

  const auto alpha = alpha_n(g);
  report.expect_true("alpha_" + std::to_string(n) + " is an automorphism fixing a and b",
                     alpha.is_automorphism() && alpha.images[g.a()] == g.a() && alpha.images[g.b()] == g.b());
  const std::vector<GnElement> moved{0, alpha.images[h]};
  report.expect_true("alpha_" + std::to_string(n) + " moves H_n out of its class, so it is not in Aut_perm",
                     !std::binary_search(cls.begin(), cls.end(), moved), "image <" + g.to_string(moved[1]) + ">");

  const auto summary = maol_perm_summary(g, options.parallel);
  report.expect_equal("central automorphisms keeping H_n in its class", summary.central_automorphisms,
                      summary.preserving_class);
  report.expect_true("serial and parallel orbit masks agree", orbit_masks_serial(g) == orbit_masks_parallel(g));
  report.expect_equal("maol_perm(" + name + ") = 4", 4, summary.max_orbit_length);

  if (n == 1) {
    Stopwatch pipeline;
    const auto image = coset_representation(g);
    AutOptions opts = options;
    const auto full = automorphism_group(image.finite(), opts);
    const auto perm = aut_perm(image, full);
    auto& c = report.expect_equal("maol_perm(G_1) through the degree-16 coset action", 4,
                                  max_orbit_length(perm, options.parallel),
                                  "degree " + std::to_string(image.degree()) + ", |Aut| = " +
                                      std::to_string(full.size()) + ", |Aut_perm| = " + std::to_string(perm.size()));
    c.seconds = pipeline.seconds();
  }
  report.set_seconds(clock.seconds());
  return report;
}

}  // namespace permorbit::gn
