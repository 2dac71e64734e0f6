#pragma once

// Slow, obviously-correct reference computations shared by the unit tests
// and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf::oracle {

// Membership over [0, limit) by repeated closure, no Apéry shortcuts.
inline std::vector<bool> closure(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Int n = 0; n < limit; ++n) {
      if (!in[static_cast<std::size_t>(n)]) continue;
      for (Int g : gens) {
        if (n + g < limit && !in[static_cast<std::size_t>(n + g)]) {
          in[static_cast<std::size_t>(n + g)] = true;
          grew = true;
        }
      }
    }
  }
  return in;
}

// Maximal elements of Ap(Γ, m) \ {0} under s ⪯ t ⇔ t - s ∈ Γ.
inline Int type(const NumericalSemigroup& ns) {
  const Int m = ns.multiplicity();
  std::vector<Int> ap;
  for (Int w = 1; w < ns.conductor() + m; ++w) {
    if (ns.contains(w) && !ns.contains(w - m)) ap.push_back(w);
  }
  Int t = 0;
  for (Int s : ap) {
    bool maximal = true;
    for (Int u : ap) maximal = maximal && (u == s || !ns.contains(u - s));
    t += maximal ? 1 : 0;
  }
  return t;
}

struct SemimoduleShape {
  std::vector<Int> generators;
  std::vector<bool> members;  // over [0, 2c(Γ) + m]
  Int conductor = 0;
  Int delta = 0;
  friend auto operator<=>(const SemimoduleShape&, const SemimoduleShape&) = default;
};

// Union of x + Γ over `gens` (containing 0), then minimization.
inline SemimoduleShape semimodule(const NumericalSemigroup& ns, std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  // Fixed window so equal sets compare equal; generators never exceed F.
  const Int window = 2 * ns.conductor() + ns.multiplicity() + 1;
  SemimoduleShape out;
  out.members.assign(static_cast<std::size_t>(window), false);
  for (Int n = 0; n < window; ++n) {
    for (Int x : gens) {
      if (n >= x && ns.contains(n - x)) out.members[static_cast<std::size_t>(n)] = true;
    }
  }
  for (Int x : gens) {
    bool redundant = false;
    for (Int y : gens) redundant = redundant || (y != x && x - y > 0 && ns.contains(x - y));
    if (!redundant) out.generators.push_back(x);
  }
  for (Int n = window - 1; n >= 0; --n) {
    if (!out.members[static_cast<std::size_t>(n)]) {
      out.conductor = n + 1;
      break;
    }
  }
  for (Int n = 0; n < out.conductor; ++n) out.delta += out.members[static_cast<std::size_t>(n)] ? 1 : 0;
  return out;
}

// Every normalized semimodule, from all subsets of the gaps joined with 0.
inline std::set<SemimoduleShape> all_semimodules(const NumericalSemigroup& ns) {
  const std::vector<Int>& gaps = ns.gaps();
  std::set<SemimoduleShape> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
    std::vector<Int> gens{0};
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if ((mask >> i) & 1U) gens.push_back(gaps[i]);
    }
    out.insert(semimodule(ns, gens));
  }
  return out;
}

// W(g) = 2δ - c of the semimodule generated by {0, g}.
inline Int wilf_gap(const NumericalSemigroup& ns, Int g) {
  const SemimoduleShape d = semimodule(ns, {0, g});
  return 2 * d.delta - d.conductor;
}

// Deterministic random semigroups with small generators.
inline std::vector<NumericalSemigroup> random_semigroups(std::size_t count, std::uint32_t seed, Int max_gen = 30) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, 5);
  std::uniform_int_distribution<Int> gen_dist(2, max_gen);
  std::vector<NumericalSemigroup> out;
  while (out.size() < count) {
    std::vector<Int> gens(static_cast<std::size_t>(size_dist(rng)));
    for (Int& g : gens) g = gen_dist(rng);
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1) continue;
    out.push_back(NumericalSemigroup::from_generators(gens));
  }
  return out;
}

}  // namespace wilf::oracle
