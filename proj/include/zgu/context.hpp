#pragma once

#include "zgu/chartab.hpp"
#include "zgu/perm.hpp"

namespace zgu {

/// A group with its computed classes, a verified character table and the
/// bijection between the two.
struct GroupContext {
  ClassTable classes;
  CharacterTable table;
  ClassMatching matching;

  /// Verifies the table (Error("VerificationFailed")) and matches classes.
  static GroupContext make(const PermGroup &group, CharacterTable table);

  /// Row `row` of the table listed in class order.
  std::vector<Cyclotomic> row(std::size_t row) const {
    return row_on_classes(table, row, matching);
  }
};

} // namespace zgu
