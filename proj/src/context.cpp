#include "zgu/context.hpp"

#include "zgu/error.hpp"

namespace zgu {

GroupContext GroupContext::make(const PermGroup &group, CharacterTable table) {
  const auto report = verify(table);
  if (!report.passed) {
    const auto &i = report.issues.front();
    throw Error("VerificationFailed", i.relation + " (" + std::to_string(i.first) + ", " +
                                          std::to_string(i.second) + "): " + i.detail);
  }
  ClassTable classes(group);
  if (classes.group_order() != table.group_order)
    throw Error("VerificationFailed", "group has order " + std::to_string(classes.group_order()) +
                                          " but the table is for order " +
                                          std::to_string(table.group_order));
  ClassMatching matching = match_classes(table, classes);
  return {std::move(classes), std::move(table), std::move(matching)};
}

} // namespace zgu
