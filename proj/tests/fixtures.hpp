#pragma once

#include <map>
#include <memory>
#include <string>

#include "zgu/context.hpp"
#include "zgu/io.hpp"

namespace fixtures {

inline const char *const kBundled[] = {"s3", "a4", "c7c3", "d8", "q8", "sl23", "a7"};

inline zgu::PermGroup group(const std::string &name) {
  return zgu::group_from_json(zgu::read_json_file(zgu::resolve_data(name, "groups")));
}

inline zgu::CharacterTable table(const std::string &name) {
  return zgu::table_from_json(zgu::read_json_file(zgu::resolve_data(name, "tables")));
}

// contexts are expensive for A7; build each once per test binary
inline const zgu::GroupContext &context(const std::string &name) {
  static std::map<std::string, std::unique_ptr<zgu::GroupContext>> cache;
  auto &slot = cache[name];
  if (!slot)
    slot = std::make_unique<zgu::GroupContext>(zgu::GroupContext::make(group(name), table(name)));
  return *slot;
}

inline zgu::Permutation perm(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    img[static_cast<std::size_t>(i)] = i;
  for (const auto &c : cycles) {
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i)
      img[static_cast<std::size_t>(v[i])] = v[(i + 1) % v.size()];
  }
  return zgu::Permutation::from_images(img);
}

inline zgu::PermGroup cyclic(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(i)] = (i + 1) % n;
  return zgu::PermGroup::enumerate({zgu::Permutation::from_images(img)}, n);
}

} // namespace fixtures
