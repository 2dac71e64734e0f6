#pragma once

#include <string>
#include <vector>

#include "wilf/semigroup.hpp"
#include "wilf/semimodule.hpp"

namespace wilf {

/// A gap of ⟨α, β⟩ written uniquely as αβ - aα - bβ with 1 <= a <= β-1 and
/// 1 <= b <= α-1.
struct LatticeGap {
  Int alpha = 0;
  Int beta = 0;
  Int a = 0;
  Int b = 0;
  Int gap = 0;

  friend bool operator==(const LatticeGap&, const LatticeGap&) = default;
};

/// Throws NotCoprime or InvalidArgument unless gcd = 1 and 2 <= α < β.
void validate_pair(Int alpha, Int beta);

/// Throws NotAGap, NotCoprime.
LatticeGap gap_coords(Int alpha, Int beta, Int g);
/// αβ - aα - bβ; throws NotAGap if the point is not a valid lattice gap.
Int coords_to_gap(const LatticeGap& lg);
/// True when (a, b) lies in the coordinate box and aα + bβ < αβ.
bool is_lattice_gap(Int alpha, Int beta, Int a, Int b);

/// Every gap of ⟨α, β⟩ in ascending gap order.
std::vector<LatticeGap> lattice_gaps(Int alpha, Int beta);

/// Requires a two-generated semigroup; returns (α, β).
std::pair<Int, Int> two_generators(const NumericalSemigroup& ns);

/// min Γ ∩ (g + Γ). Throws InternalInconsistency unless it equals αβ - aα
/// or αβ - bβ.
Int min_gamma_intersection(const NumericalSemigroup& ns, Int g);

enum class LatticeBranch {
  /// min Γ ∩ (Γ + g) = αβ - bβ
  MinusBBeta,
  /// min Γ ∩ (Γ + g) = αβ - aα
  MinusAAlpha,
};

LatticeBranch lattice_branch(const NumericalSemigroup& ns, const LatticeGap& lg);

/// W(g) from the lattice coordinates: -W = aα - 2ab on the αβ - bβ branch
/// and -W = bβ - 2ab on the αβ - aα branch.
Int wilf_gap_closed_form(const NumericalSemigroup& ns, const LatticeGap& lg);

struct SemimoduleClosedForms {
  Int conductor = 0;  ///< c(Γ) - aα or c(Γ) - bβ depending on the branch
  Int delta = 0;      ///< conductor - δ(Γ) + ab
};

/// Closed forms for c(Δ_{[0,g]}) and δ(Δ_{[0,g]}) using c(Γ) = (α-1)(β-1)
/// and δ(Γ) = (αβ - α - β + 1)/2.
SemimoduleClosedForms semimodule_closed_forms(const NumericalSemigroup& ns, const LatticeGap& lg);

/// Verifies the closed forms of W(g), c(Δ_{[0,g]}) and δ(Δ_{[0,g]}) against
/// a sieve table for every gap. Throws InternalInconsistency.
bool check_closed_forms(const NumericalSemigroup& ns, std::span<const GapWilf> sieve);

/// -W(a, b) = W(a, α-b) and -W(a, b) = W(β-a, b) on every pair of mirrored
/// valid lattice gaps, with W taken from the sieve. Throws
/// InternalInconsistency.
bool check_symmetry(Int alpha, Int beta);
bool check_symmetry(Int alpha, Int beta, std::span<const GapWilf> sieve);

/// W_Δ(3) >= 0 for every Δ_{[0,g]}, αβ - 2(α+β) + 2 >= 0 when α >= 3, and
/// max W(g) = -min W(g) < δ(Γ). Throws InternalInconsistency.
bool check_thm_4_15(Int alpha, Int beta);
bool check_thm_4_15(const NumericalSemigroup& ns, std::span<const GapWilf> sieve);

/// Lattice points strictly below the diagonal with b <= ⌊α/2⌋ (resp.
/// a <= ⌊β/2⌋). Boundary convention: strict on the diagonal, inclusive on
/// the half-lines.
bool in_upper_triangle(const LatticeGap& lg);
bool in_right_triangle(const LatticeGap& lg);

struct LatticeRow {
  LatticeGap point;
  Int wilf = 0;
};

/// Rows ordered by (b, a), from the sieve.
std::vector<LatticeRow> lattice_dump(Int alpha, Int beta);

std::string lattice_csv(std::span<const LatticeRow> rows);
/// Heatmap with a to the right and b upward; cells colored by the sign of
/// W. Output bytes depend only on the rows.
std::string lattice_svg(Int alpha, Int beta, std::span<const LatticeRow> rows);

}  // namespace wilf
