#include "permorbit/group_map.hpp"

#include <algorithm>

namespace permorbit {

bool respects_generators(const FiniteGroup& source, const FiniteGroup& target,
                         const std::vector<Elem>& images) {
  if (images.size() != source.order() || images[0] != 0) return false;
  for (std::size_t x = 0; x < source.order(); ++x) {
    for (Elem s : source.generators()) {
      Elem xs = source.mul(static_cast<Elem>(x), s);
      if (images[xs] != target.mul(images[x], images[s])) return false;
    }
  }
  return true;
}

bool respects_all_products(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<Elem>& images) {
  if (images.size() != source.order()) return false;
  for (std::size_t x = 0; x < source.order(); ++x) {
    for (std::size_t y = 0; y < source.order(); ++y) {
      Elem xy = source.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      if (images[xy] != target.mul(images[x], images[y])) return false;
    }
  }
  return true;
}

bool is_bijection(const std::vector<Elem>& images, std::size_t target_order) {
  if (images.size() != target_order) return false;
  std::vector<char> hit(target_order, 0);
  for (Elem y : images) {
    if (y >= target_order || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

GroupMap make_group_map(FiniteGroupPtr source, FiniteGroupPtr target, std::vector<Elem> images) {
  GroupMap m;
  m.homomorphism_verified = respects_generators(*source, *target, images);
  m.bijective = is_bijection(images, target->order());
  m.source = std::move(source);
  m.target = std::move(target);
  m.images = std::move(images);
  return m;
}

std::vector<Elem> image_of(const GroupMap& map, const std::vector<Elem>& elems) {
  std::vector<Elem> out;
  out.reserve(elems.size());
  for (Elem x : elems) out.push_back(map.images[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace permorbit
