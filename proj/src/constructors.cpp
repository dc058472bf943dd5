#include "permorbit/constructors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permorbit {

namespace {

Permutation rotation(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return Permutation(std::move(images));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t positive_param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer() || params[key].get<long long>() < 1) {
    throw std::invalid_argument(std::string("group spec: '") + key + "' must be a positive integer");
  }
  return params[key].get<std::size_t>();
}

}  // namespace

PermutationGroup cyclic_regular(std::size_t m) {
  if (m < 1) throw std::invalid_argument("cyclic_regular: m must be at least 1");
  if (m == 1) return PermutationGroup(1, {});
  return PermutationGroup(m, {rotation(m)});
}

PermutationGroup abelian_regular(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (std::size_t f : factors) {
    if (f < 2) throw std::invalid_argument("abelian_regular: each factor must be at least 2");
    n *= f;
    if (n > FiniteGroup::kMaxOrder) throw CapExceeded("abelian_regular: order too large");
  }
  std::vector<Permutation> gens;
  std::size_t stride = 1;
  for (std::size_t f : factors) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t digit = (x / stride) % f;
      std::size_t y = x - digit * stride + ((digit + 1) % f) * stride;
      images[x] = static_cast<Point>(y);
    }
    gens.emplace_back(std::move(images));
    stride *= f;
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup dihedral_natural(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral_natural: n must be at least 3");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermutationGroup(n, {rotation(n), Permutation(std::move(refl))});
}

PermutationGroup symmetric_natural(std::size_t n) {
  if (n < 1) throw std::invalid_argument("symmetric_natural: n must be at least 1");
  if (n == 1) return PermutationGroup(1, {});
  return PermutationGroup(n, {rotation(n), Permutation::from_cycles(n, {{0, 1}})});
}

PermutationGroup alternating_natural(std::size_t n) {
  if (n < 1) throw std::invalid_argument("alternating_natural: n must be at least 1");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup regular_representation(const FiniteGroup& g) {
  return PermutationGroup(g.order(), g.regular_generators());
}

Permutation DirectProduct::embed_left(const Permutation& g) const {
  return pair(g, Permutation(right_degree));
}

Permutation DirectProduct::embed_right(const Permutation& h) const {
  return pair(Permutation(left_degree), h);
}

Permutation DirectProduct::pair(const Permutation& g, const Permutation& h) const {
  if (g.degree() != left_degree || h.degree() != right_degree) {
    throw PermutationError("direct product: factor degree mismatch");
  }
  std::vector<Point> images(left_degree + right_degree);
  for (std::size_t i = 0; i < left_degree; ++i) images[i] = g[static_cast<Point>(i)];
  for (std::size_t i = 0; i < right_degree; ++i) {
    images[left_degree + i] = static_cast<Point>(left_degree + h[static_cast<Point>(i)]);
  }
  return Permutation(std::move(images));
}

DirectProduct direct_product(const PermutationGroup& g, const PermutationGroup& h) {
  DirectProduct dp{PermutationGroup(), g.degree(), h.degree()};
  std::vector<Permutation> gens;
  for (const Permutation& x : g.generators()) gens.push_back(dp.embed_left(x));
  for (const Permutation& y : h.generators()) gens.push_back(dp.embed_right(y));
  dp.group = PermutationGroup(g.degree() + h.degree(), std::move(gens));
  return dp;
}

CosetAction coset_action(const FiniteGroupPtr& g, const std::vector<Elem>& h) {
  const std::size_t n = g->order();
  if (n % h.size() != 0) throw std::invalid_argument("coset_action: not a subgroup");
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> provisional(n, kUnset);
  std::uint32_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (provisional[x] != kUnset) continue;
    for (Elem y : h) provisional[g->mul(y, static_cast<Elem>(x))] = count;
    ++count;
  }
  std::vector<std::uint32_t> label(count, kUnset);
  std::vector<Elem> reps{0};
  label[provisional[0]] = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : g->generators()) {
      Elem y = g->mul(reps[i], s);
      if (label[provisional[y]] == kUnset) {
        label[provisional[y]] = static_cast<std::uint32_t>(reps.size());
        reps.push_back(y);
      }
    }
  }
  if (reps.size() != count) throw std::logic_error("coset_action: generators do not reach all cosets");

  auto action_of = [&](Elem x) {
    std::vector<Point> images(count);
    for (std::size_t i = 0; i < count; ++i) images[i] = label[provisional[g->mul(reps[i], x)]];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (Elem s : g->generators()) gens.push_back(action_of(s));
  CosetAction out{PermutationGroup(count, gens), GroupMap{}, 0, reps};
  FiniteGroupPtr target = out.image.finite();
  std::vector<Elem> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = *target->index_of(action_of(static_cast<Elem>(x)));
  out.epimorphism = make_group_map(g, target, std::move(images));
  return out;
}

CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h) {
  return coset_action(g.finite(), element_indices(g, h));
}

CandidatePair candidate_pair(int row) {
  struct Generator {
    std::array<int, 2> abelian;
    const char* alt5;
  };
  struct Row {
    std::vector<std::size_t> factors;
    const char* group_label;
    const char* stabilizer_label;
    std::vector<Generator> gens;
    std::uint64_t expected;
  };
  static const std::vector<Row> rows = {
      {{3}, "Z/3 x Alt(5)", "<(1,(1,2,3))>", {{{1, 0}, "(1,2,3)"}}, 48},
      {{6}, "Z/6 x Alt(5)", "<(2,(1,2,3))>", {{{2, 0}, "(1,2,3)"}}, 48},
      {{3}, "Z/3 x Alt(5)", "<(0,(1,2)(3,4)),(1,(1,2,3))>",
       {{{0, 0}, "(1,2)(3,4)"}, {{1, 0}, "(1,2,3)"}}, 40},
      {{6}, "Z/6 x Alt(5)", "<(0,(1,2)(3,4)),(2,(1,2,3))>",
       {{{0, 0}, "(1,2)(3,4)"}, {{2, 0}, "(1,2,3)"}}, 40},
      {{5}, "Z/5 x Alt(5)", "<(1,(1,2,3,4,5))>", {{{1, 0}, "(1,2,3,4,5)"}}, 80},
      {{10}, "Z/10 x Alt(5)", "<(2,(1,2,3,4,5))>", {{{2, 0}, "(1,2,3,4,5)"}}, 80},
      {{2}, "Z/2 x Alt(5)", "<(1,(1,2)(3,4))>", {{{1, 0}, "(1,2)(3,4)"}}, 24},
      {{2}, "Z/2 x Alt(5)", "<(0,(1,2,3)),(1,(2,3)(4,5))>",
       {{{0, 0}, "(1,2,3)"}, {{1, 0}, "(2,3)(4,5)"}}, 24},
      {{2}, "Z/2 x Alt(5)", "<(0,(1,2,3,4,5)),(1,(2,5)(3,4))>",
       {{{0, 0}, "(1,2,3,4,5)"}, {{1, 0}, "(2,5)(3,4)"}}, 24},
      {{2}, "Z/2 x Alt(5)", "<(0,(1,2)(3,4)),(1,(1,3)(2,4))>",
       {{{0, 0}, "(1,2)(3,4)"}, {{1, 0}, "(1,3)(2,4)"}}, 24},
      {{2, 2}, "(Z/2)^2 x Alt(5)", "<((1,0),(1,2)(3,4)),((0,1),(1,3)(2,4))>",
       {{{1, 0}, "(1,2)(3,4)"}, {{0, 1}, "(1,3)(2,4)"}}, 72},
  };
  if (row < 1 || row > kCandidatePairCount) {
    throw std::out_of_range("candidate pair row must be in 1.." + std::to_string(kCandidatePairCount));
  }
  const Row& r = rows[static_cast<std::size_t>(row - 1)];

  // The abelian factor acts by rotations on disjoint blocks, one per cyclic factor.
  PermutationGroup abelian = cyclic_regular(r.factors[0]);
  for (std::size_t i = 1; i < r.factors.size(); ++i) {
    abelian = direct_product(abelian, cyclic_regular(r.factors[i])).group;
  }
  auto abelian_element = [&](const std::array<int, 2>& coords) {
    std::vector<Point> images(abelian.degree());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      std::size_t f = r.factors[i];
      for (std::size_t p = 0; p < f; ++p) {
        images[offset + p] = static_cast<Point>(offset + (p + static_cast<std::size_t>(coords[i])) % f);
      }
      offset += f;
    }
    return Permutation(std::move(images));
  };

  CandidatePair out;
  out.row = row;
  out.group_label = r.group_label;
  out.stabilizer_label = r.stabilizer_label;
  out.abelian_factors = r.factors;
  out.product = direct_product(abelian, alternating_natural(5));
  out.expected_maol_perm = r.expected;
  std::vector<Permutation> stab;
  for (const Generator& gen : r.gens) {
    stab.push_back(out.product.pair(abelian_element(gen.abelian), parse_permutation(gen.alt5, 5)));
  }
  out.stabilizer = make_subgroup(out.product.group, std::move(stab)).group;
  out.action = coset_action(out.product.group, out.stabilizer);
  return out;
}

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("group spec: expected an object with a string 'kind'");
  }
  GroupSpec spec;
  spec.kind = j["kind"].get<std::string>();
  spec.params = j;
  spec.params.erase("kind");
  return spec;
}

nlohmann::json GroupSpec::to_json() const {
  nlohmann::json j = params;
  j["kind"] = kind;
  return j;
}

PermutationGroup GroupSpec::build() const {
  if (kind == "cyclic-regular") return cyclic_regular(positive_param(params, "m"));
  if (kind == "abelian-regular") {
    if (!params.contains("factors") || !params["factors"].is_array()) {
      throw std::invalid_argument("group spec: 'factors' must be an array");
    }
    std::vector<std::size_t> factors;
    for (const auto& f : params["factors"]) {
      if (!f.is_number_integer() || f.get<long long>() < 2) {
        throw std::invalid_argument("group spec: factors must be integers >= 2");
      }
      factors.push_back(f.get<std::size_t>());
    }
    return abelian_regular(factors);
  }
  if (kind == "dihedral-natural") return dihedral_natural(positive_param(params, "n"));
  if (kind == "sym-natural") return symmetric_natural(positive_param(params, "n"));
  if (kind == "alt-natural") return alternating_natural(positive_param(params, "n"));
  if (kind == "direct-product") {
    if (!params.contains("left") || !params.contains("right")) {
      throw std::invalid_argument("group spec: direct-product needs 'left' and 'right'");
    }
    return direct_product(from_json(params["left"]).build(), from_json(params["right"]).build()).group;
  }
  if (kind == "coset-action") {
    if (!params.contains("group") || !params.contains("subgroup") || !params["subgroup"].is_string()) {
      throw std::invalid_argument("group spec: coset-action needs 'group' and a 'subgroup' string");
    }
    PermutationGroup g = from_json(params["group"]).build();
    auto gens = parse_permutation_list(params["subgroup"].get<std::string>(), g.degree());
    SubgroupHandle h = make_subgroup(g, std::move(gens));
    return coset_action(g, h.group).image;
  }
  if (kind == "raw-generators") {
    std::size_t degree = positive_param(params, "degree");
    std::string gens = params.contains("gens") && params["gens"].is_string()
                           ? params["gens"].get<std::string>()
                           : std::string();
    return PermutationGroup(degree, parse_permutation_list(gens, degree));
  }
  throw std::invalid_argument("group spec: unknown kind '" + kind + "'");
}

PermutationGroup parse_group_spec(const std::string& text) {
  std::optional<std::size_t> degree;
  std::optional<std::string> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string field = trim(std::string_view(text).substr(start, end - start));
    start = end + 1;
    if (field.empty()) continue;
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("group spec: expected key=value, got '" + field + "'");
    std::string key = trim(field.substr(0, eq));
    std::string value = trim(field.substr(eq + 1));
    if (key == "degree") {
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("group spec: degree must be a positive integer");
      }
      degree = std::stoul(value);
      if (*degree == 0) throw std::invalid_argument("group spec: degree must be a positive integer");
    } else if (key == "gens") {
      gens = value;
    } else {
      throw std::invalid_argument("group spec: unknown key '" + key + "'");
    }
  }
  if (!degree) throw std::invalid_argument("group spec: missing degree");
  return PermutationGroup(*degree, parse_permutation_list(gens.value_or(""), *degree));
}

}  // namespace permorbit
