#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wilf/bitset.hpp"
#include "wilf/checked.hpp"

namespace wilf {

/// A cofinite additive submonoid of the naturals.
///
/// Membership is stored as a bit table over [0, c + 2m); every n beyond the
/// table is a member. Instances are immutable once built and safe to share
/// across threads.
class NumericalSemigroup {
 public:
  /// The naturals themselves: no gaps, F = -1, c = 0, m = 1, e = 1.
  NumericalSemigroup();

  /// Smallest submonoid containing `gens`. Input may repeat values and need
  /// not be minimal. Throws EmptyInput, InvalidArgument (entry < 1) or
  /// NotCofinite (gcd != 1).
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Smallest submonoid containing `gens` and every integer >= threshold.
  static NumericalSemigroup with_threshold(std::span<const Int> gens, Int threshold);
  static NumericalSemigroup with_threshold(std::initializer_list<Int> gens, Int threshold) {
    return with_threshold(std::span<const Int>(gens.begin(), gens.size()), threshold);
  }

  /// Semigroup whose complement is exactly `gaps`; throws InvalidArgument if
  /// the complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return membership_.test(static_cast<std::size_t>(n));
  }

  bool is_naturals() const noexcept { return conductor_ == 0; }

  const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  Int multiplicity() const noexcept { return multiplicity_; }
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int conductor() const noexcept { return conductor_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  /// Members below the conductor.
  Int delta() const noexcept { return conductor_ - genus(); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(minimal_generators_.size()); }

  /// Membership over [0, c + 2m).
  const BitTable& membership() const noexcept { return membership_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.gaps_ == b.gaps_;
  }

 private:
  static NumericalSemigroup from_table(BitTable table, Int conductor);

  std::vector<Int> minimal_generators_;
  std::vector<Int> gaps_;
  Int multiplicity_ = 1;
  Int conductor_ = 0;
  BitTable membership_;
};

/// Ap(Γ, s): for each residue mod s the least member in that class.
struct AperySet {
  Int modulus = 1;
  /// Sorted ascending, elements[0] == 0.
  std::vector<Int> elements;
  /// by_residue[i] is the element congruent to i mod s.
  std::vector<Int> by_residue;
};

/// Throws NotAMember unless s is a nonzero member.
AperySet apery_set(const NumericalSemigroup& ns, Int s);

/// s ⪯ t, i.e. t - s ∈ Γ. Both arguments must be members.
bool divides(const NumericalSemigroup& ns, Int s, Int t);

struct TypeInfo {
  /// |max Ap(Γ, m)|
  Int type = 0;
  /// |min Ap(Γ, m)|
  Int min_apery_count = 0;
};

/// Throws NaturalsHasNoType for Γ = ℕ.
TypeInfo type_info(const NumericalSemigroup& ns);
inline Int type_of(const NumericalSemigroup& ns) { return type_info(ns).type; }

/// Evaluates both the reflection characterization and c = 2δ; throws
/// InternalInconsistency if they disagree.
bool is_symmetric(const NumericalSemigroup& ns);

/// Membership over [0, limit) rebuilt from the minimal generators by a
/// plain coin-change sieve. Independent of the constructor's Apéry route.
std::vector<bool> sieve_from_generators(std::span<const Int> gens, Int limit);

}  // namespace wilf
