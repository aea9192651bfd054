#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zgu {

inline constexpr int kMaxDegree = 32;
inline constexpr std::size_t kMaxGroupOrder = 100000;

/// A permutation of {0, ..., degree-1}. Products act on the right:
/// (a * b)(i) = b(a(i)), so conjugation is x^t = t^-1 * x * t.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int degree);

  /// Validates that `images` is a bijection on {0, ..., images.size()-1}.
  /// Throws Error("InvalidPermutation") otherwise.
  static Permutation from_images(std::span<const int> images);

  int degree() const noexcept { return degree_; }
  int operator[](int i) const noexcept { return images_[static_cast<std::size_t>(i)]; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  /// t^-1 * this * t
  Permutation conjugate_by(const Permutation &t) const;

  bool is_identity() const noexcept;
  long order() const;

  std::vector<int> images() const;
  /// Disjoint cycle notation, e.g. "(0,1,2)(3,4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const noexcept;

private:
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t degree_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

/// A finite permutation group with all elements enumerated and sorted
/// lexicographically on their image arrays.
class PermGroup {
public:
  PermGroup() = default;

  /// Breadth-first closure of `generators`. Throws Error("DegreeMismatch")
  /// or Error("OrderCapExceeded").
  static PermGroup enumerate(std::vector<Permutation> generators, int degree);

  /// Subgroup given by a closed set of elements; generators are chosen greedily.
  static PermGroup from_elements(std::vector<Permutation> elements, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  const Permutation &identity() const { return elements_.front(); }

  bool contains(const Permutation &x) const;
  /// Position of `x` in elements(); throws Error("ElementNotInGroup").
  std::size_t index_of(const Permutation &x) const;

  /// lcm of element orders
  long exponent() const;
  bool is_abelian() const;

  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::string name_;
};

struct ConjugacyClass {
  Permutation representative; ///< lexicographically minimal element
  std::size_t size = 0;
  long element_order = 1;
  std::string name; ///< e.g. "1a", "2a", "3b"
};

/// Conjugacy classes of a group in canonical order, (element_order, size,
/// representative) ascending, with power maps for every residue modulo the
/// exponent.
class ClassTable {
public:
  explicit ClassTable(PermGroup group);

  const PermGroup &group() const noexcept { return group_; }
  std::size_t group_order() const noexcept { return group_.order(); }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<ConjugacyClass> &classes() const noexcept { return classes_; }
  const ConjugacyClass &operator[](std::size_t c) const { return classes_.at(c); }
  long exponent() const noexcept { return exponent_; }

  std::size_t class_of(const Permutation &x) const;
  std::size_t class_of_index(std::size_t element_index) const {
    return class_by_element_.at(element_index);
  }
  /// Index of the class named `name`; throws Error("UnknownClass").
  std::size_t class_by_name(const std::string &name) const;

  /// pi_s: class of x  ->  class of x^s. Any integer s, including negative.
  const std::vector<std::size_t> &power_map(long long s) const;

  /// Singleton classes.
  std::vector<std::size_t> central_classes() const;

private:
  PermGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_by_element_;
  std::vector<std::vector<std::size_t>> power_maps_; // indexed by s mod exponent
  long exponent_ = 1;
};

ClassTable conjugacy_classes(const PermGroup &group);

struct SylowInfo {
  long p = 0;
  std::size_t sylow_order = 1;
  bool is_cyclic = true;
  bool is_generalized_quaternion = false;
  bool has_klein_four = false;
  std::size_t involution_count = 0;
};

/// Sylow p-subgroup grown from a p-element of maximal order by adjoining
/// p-elements of its normalizer. Throws Error("NotPrime").
PermGroup sylow_subgroup(const PermGroup &group, long p);

SylowInfo sylow_analysis(const PermGroup &group, long p);

/// N_G(<x>). Throws Error("ElementNotInGroup").
PermGroup normalizer_of_cyclic(const PermGroup &group, const Permutation &x);

/// Smallest normal subgroup containing `elements`.
PermGroup normal_closure(const PermGroup &group, std::span<const Permutation> elements);

struct QuotientResult {
  PermGroup kernel;   ///< O_{pi'}(G)
  PermGroup quotient; ///< G / kernel acting on right cosets of the kernel
};

/// Largest normal subgroup of order coprime to every prime in `pi`, and the
/// quotient by it. Throws Error("QuotientTooLarge") if the coset action would
/// exceed kMaxDegree points.
QuotientResult o_pi_prime_quotient(const PermGroup &group, std::span<const long> pi);

// Small number theory used throughout.
long gcd_l(long a, long b);
long lcm_l(long a, long b);
bool is_prime(long n);
std::vector<long> prime_factors(long n);
std::vector<long> divisors(long n);
long euler_phi(long n);
long mobius(long n);
/// Non-negative remainder.
long mod_l(long long a, long n);
/// Inverse of s modulo n; requires gcd(s, n) = 1.
long inverse_mod(long s, long n);

} // namespace zgu
