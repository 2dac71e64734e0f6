#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf {

/// A Γ-semimodule translated so that its least element is 0.
///
/// `generator_count` counts every minimal generator including 0, so the
/// semimodule Wilf number is generator_count·δ(Δ) - c(Δ). In particular Γ
/// viewed as a semimodule has generator_count 1; the semigroup's own Wilf
/// number W_Γ(e) lives in wilf_analysis and is never derived from here.
class GammaSemimodule {
 public:
  /// Minimal generators, ascending, first element 0.
  const std::vector<Int>& minimal_generators() const noexcept { return generators_; }
  Int generator_count() const noexcept { return static_cast<Int>(generators_.size()); }
  /// Number of nonzero minimal generators.
  Int rank() const noexcept { return generator_count() - 1; }
  Int conductor() const noexcept { return conductor_; }
  Int frobenius() const noexcept { return conductor_ - 1; }
  /// |{x ∈ Δ : x < c(Δ)}|
  Int delta() const noexcept { return delta_; }
  Int genus() const noexcept { return conductor_ - delta_; }
  /// Amount subtracted from the input generators during normalization.
  Int shift() const noexcept { return shift_; }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return membership_.test(static_cast<std::size_t>(n));
  }

  /// Membership over [0, c(Δ) + m).
  const BitTable& membership() const noexcept { return membership_; }

  /// Same set of integers after normalization.
  friend bool operator==(const GammaSemimodule& a, const GammaSemimodule& b) {
    return a.generators_ == b.generators_ && a.conductor_ == b.conductor_ && a.delta_ == b.delta_;
  }

 private:
  friend GammaSemimodule semimodule_from_generators(const NumericalSemigroup&, std::span<const Int>);

  std::vector<Int> generators_;
  Int conductor_ = 0;
  Int delta_ = 0;
  Int shift_ = 0;
  BitTable membership_;
};

/// Δ = ∪ (x + Γ) over `gens`, shifted so min Δ = 0. Throws EmptyInput.
GammaSemimodule semimodule_from_generators(const NumericalSemigroup& ns, std::span<const Int> gens);
inline GammaSemimodule semimodule_from_generators(const NumericalSemigroup& ns, std::initializer_list<Int> gens) {
  return semimodule_from_generators(ns, std::span<const Int>(gens.begin(), gens.size()));
}

/// Δ_{[0,g]} = Γ ∪ (g + Γ). Throws NotAGap unless g is a gap of Γ.
GammaSemimodule gap_semimodule(const NumericalSemigroup& ns, Int g);

/// W_Δ(k) = kδ(Δ) - c(Δ).
inline Int wilf_function_semimodule(const GammaSemimodule& d, Int k) {
  return wilf_combination(k, d.delta(), d.conductor());
}

/// W(Δ) = e(Δ)·δ(Δ) - c(Δ) with e(Δ) = generator_count().
inline Int wilf_number(const GammaSemimodule& d) { return wilf_function_semimodule(d, d.generator_count()); }

/// W(g) = 2δ(Δ_{[0,g]}) - c(Δ_{[0,g]}), built from gap_semimodule.
Int wilf_gap(const NumericalSemigroup& ns, Int g);

struct GapWilf {
  Int gap = 0;
  Int conductor = 0;  ///< c(Δ_{[0,g]})
  Int delta = 0;      ///< δ(Δ_{[0,g]})
  Int wilf = 0;       ///< 2δ - c
};

/// W(g) for every gap, ascending by gap. Counts gaps(Γ) \ (g + Γ) one
/// residue class mod m at a time from Ap(Γ, m), so each gap costs O(m).
/// Agrees with wilf_gap() row by row.
std::vector<GapWilf> gap_wilf_table(const NumericalSemigroup& ns);

struct GapWilfExtremes {
  Int min = 0;
  Int max = 0;
  std::vector<Int> argmin_gaps;
  std::vector<Int> argmax_gaps;
};

/// Throws NaturalsUnsupported.
GapWilfExtremes wilf_gap_extremes(const NumericalSemigroup& ns);
GapWilfExtremes wilf_gap_extremes(std::span<const GapWilf> table);

struct BoundCheck {
  bool holds = false;
  Int min_wg = 0;
  Int minus_wilf_e = 0;  ///< -W_Γ(e(Γ))
};

/// min W(g) >= -W_Γ(e). A false `holds` is a counterexample, not an error.
BoundCheck check_bound_conjecture(const NumericalSemigroup& ns);
BoundCheck check_bound_conjecture(const NumericalSemigroup& ns, const GapWilfExtremes& ext);

/// max W(g) <= W_Γ(4). Throws InternalInconsistency on violation.
bool check_thm_4_2(const NumericalSemigroup& ns);
bool check_thm_4_2(const NumericalSemigroup& ns, const GapWilfExtremes& ext);

/// max W(g) - min W(g) < 2δ(Γ), and < c(Γ) when Γ is symmetric. Throws
/// InternalInconsistency on violation.
bool check_prop_4_3(const NumericalSemigroup& ns);
bool check_prop_4_3(const NumericalSemigroup& ns, const GapWilfExtremes& ext);

/// The sharper range bound max - min <= 2δ - 2. It fails already for
/// ⟨3,4,5⟩, so it is reported rather than asserted.
bool gap_range_sharp_bound(const NumericalSemigroup& ns, const GapWilfExtremes& ext);

/// Calls `visit` once per semimodule containing 0 as its least element,
/// i.e. once per set of gaps whose pairwise differences are all gaps
/// (including the empty set, giving Δ = Γ). Order: generator lists in
/// lexicographic order. Throws NaturalsUnsupported.
void for_each_semimodule(const NumericalSemigroup& ns, const std::function<void(const GammaSemimodule&)>& visit);
std::vector<GammaSemimodule> enumerate_semimodules(const NumericalSemigroup& ns);

/// Least k with W_Δ(k) >= 0 for every semimodule Δ.
Int mu_gamma_delta(const NumericalSemigroup& ns);
/// Same, restricted to semimodules with `generator_count` minimal
/// generators. Throws NoSuchSemimodule when there are none.
Int mu_delta_r(const NumericalSemigroup& ns, Int generator_count);

}  // namespace wilf
