#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zgu/cyclotomic.hpp"
#include "zgu/perm.hpp"

namespace zgu {

struct ClassMeta {
  std::size_t size = 1;
  long element_order = 1;
  std::string name;
};

/// Ordinary character table: rows are irreducible characters, columns are
/// conjugacy classes in the table's own (file) order.
struct CharacterTable {
  std::string name;
  std::size_t group_order = 1;
  std::vector<ClassMeta> classes;
  /// Stored power maps keyed by s (usually the primes dividing |G|).
  std::map<long, std::vector<std::size_t>> power_maps;
  std::vector<std::vector<Cyclotomic>> values;
  std::optional<std::vector<int>> schur_indices;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t num_rows() const { return values.size(); }
  long exponent() const;
  Rational degree(std::size_t row) const { return values.at(row).at(0).as_rational(); }
  bool row_is_rational(std::size_t row) const;

  /// Column map x -> x^s for any integer s. Composed from stored prime maps;
  /// for s coprime to |G| a missing map is derived from the Galois action on
  /// columns. Throws Error("MissingPowerMap").
  std::vector<std::size_t> power_map(long long s) const;
};

struct VerificationIssue {
  std::string relation; ///< "row-orthogonality", "column-orthogonality", "degree", ...
  std::size_t first = 0;
  std::size_t second = 0;
  std::string detail;
};

struct VerificationReport {
  bool passed = true;
  std::vector<VerificationIssue> issues;
};

VerificationReport verify(const CharacterTable &table);

enum class FamilyKind { Cyclic, Dihedral, Quaternion };

/// Analytic table of C_n, D_{2m} (order 2m) or Q_{4m} (order 4m).
/// Throws Error("UnsupportedOrder").
CharacterTable family_table(FamilyKind kind, long order);
FamilyKind parse_family_kind(const std::string &s);

/// Character of G induced from the linear character zeta^(j k) on x^k of <x>,
/// evaluated on every class of `classes` by summing over all of G.
/// Throws Error("ElementNotInGroup").
std::vector<Cyclotomic> induce_from_cyclic(const ClassTable &classes, const Permutation &x,
                                           long char_index);

/// Bijection between computed classes and table columns.
struct ClassMatching {
  std::vector<std::size_t> column_of_class;
  std::vector<std::size_t> class_of_column;
  /// Number of bijections consistent with sizes, orders and power maps.
  std::size_t consistent_assignments = 0;
  /// Groups of classes whose column differs between consistent bijections.
  std::vector<std::vector<std::size_t>> ambiguous_classes;
};

/// Throws Error("NoConsistentMatch") naming the first inconsistent fingerprint.
ClassMatching match_classes(const CharacterTable &table, const ClassTable &classes);

/// The row in class order (computed classes) rather than column order.
std::vector<Cyclotomic> row_on_classes(const CharacterTable &table, std::size_t row,
                                       const ClassMatching &matching);

/// Inner product (1/|G|) sum_c |c| f(c) conj(g(c)) for class functions on `classes`.
Cyclotomic inner_product(const ClassTable &classes, const std::vector<Cyclotomic> &f,
                         const std::vector<Cyclotomic> &g);

} // namespace zgu
