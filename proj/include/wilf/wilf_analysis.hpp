#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf {

/// Bookkeeping over the blocks I_α = [αm, (α+1)m - 1].
///
/// `n` uses the strict reading n_α = |{s ∈ Γ ∩ I_α : s < F}|, the one under
/// which δ = Σ n_α. At α = L it can differ from |Γ ∩ I_L| when ρ < m.
struct IntervalStats {
  Int multiplicity = 0;
  Int L = 0;    ///< ⌊(c - 1) / m⌋
  Int rho = 0;  ///< c - L·m, in [2, m]
  std::vector<Int> n;    ///< n_0 … n_L
  std::vector<Int> eta;  ///< η_1 … η_{m-1}, stored at index j - 1
  std::vector<Int> eps;  ///< ε_1 … ε_{m-1}, stored at index j - 1
  /// η recomputed from consecutive sorted Apéry elements.
  std::vector<Int> eta_from_apery;
};

/// Throws NaturalsUnsupported for ℕ and InternalInconsistency if the direct
/// and Apéry routes for η disagree, or δ ≠ Σ n_α, or δ ≠ Σ j·η_j + ρ - m.
IntervalStats interval_stats(const NumericalSemigroup& ns);

/// W_Γ(k) = kδ - c.
inline Int wilf_value(const NumericalSemigroup& ns, Int k) {
  return wilf_combination(k, ns.delta(), ns.conductor());
}

/// Least k with W_Γ(k) >= 0, i.e. ⌈c/δ⌉. For ℕ every k qualifies and the
/// function returns 1 by convention.
Int mu(const NumericalSemigroup& ns);

struct MuReport {
  Int mu = 0;
  Int wilf_at_mu = 0;
  Int embedding_dimension = 0;
  Int wilf_at_e = 0;
  Int gap_e_minus_mu = 0;
};

MuReport mu_report(const NumericalSemigroup& ns);

struct WilfTypeCheck {
  bool holds = false;
  /// kδ - c
  Int direct = 0;
  /// Σ_{j=0}^{L} (k·n_j - m) + m - ρ
  Int interval_form = 0;
};

/// Decides c <= kδ both directly and through the block sums; for k = m the
/// rewriting m·Σ(n_j - 1) + m - ρ is checked as well. Disagreement throws
/// InternalInconsistency. Throws NaturalsUnsupported for ℕ.
WilfTypeCheck check_wilf_type(const NumericalSemigroup& ns, Int k);

/// q when Γ = ⟨m, qm+1, …, qm+m-1⟩ with m >= 2, q >= 1; decided from the
/// minimal generators alone.
std::optional<Int> max_family_parameter(const NumericalSemigroup& ns);

struct ExtremeClass {
  enum class Kind { Naturals, MaxFamily, TwoGenSymmetric, Other };
  Kind kind = Kind::Other;
  /// (m, q) for MaxFamily, (a, b) for TwoGenSymmetric.
  Int first = 0;
  Int second = 0;

  friend bool operator==(const ExtremeClass&, const ExtremeClass&) = default;
};

std::string to_string(ExtremeClass::Kind kind);

/// Naturals, then two-generated, then the ⟨m, qm+1, …⟩ family, else Other.
/// For m = 2 the two shapes coincide and the two-generated label wins; use
/// max_family_parameter() when only the family matters. Whenever the family
/// is detected, W_Γ(m) = 0 and t(Γ) = m - 1 are cross-checked.
ExtremeClass classify_extreme(const NumericalSemigroup& ns);

/// B = (m-1)⌊w_{m-1}/m⌋ - Σ_j ⌊w_j/m⌋ over the sorted Apéry set of m.
/// Asserts B >= 0 and B = 0 exactly on the ⟨m, qm+1, …⟩ family.
Int remark_B(const NumericalSemigroup& ns);

struct FrogoReport {
  bool equality = false;  ///< c = e·δ
  bool two_generated = false;
  bool max_family = false;
  /// equality ⇔ (two_generated ∨ max_family). False is a counterexample.
  bool conjecture_consistent = false;
};

FrogoReport frogo_equality_check(const NumericalSemigroup& ns);

/// If W_Γ(k) = 0 for some k >= 1, checks kδ <= (L+1)m and k <= m. Returns
/// the zero k if any.
std::optional<Int> check_wilf_zero_bound(const NumericalSemigroup& ns);

}  // namespace wilf
