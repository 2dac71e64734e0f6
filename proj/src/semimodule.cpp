#include "wilf/semimodule.hpp"

#include <algorithm>
#include <string>

#include "wilf/wilf_analysis.hpp"

namespace wilf {

namespace {

void require_not_naturals(const NumericalSemigroup& ns) {
  if (ns.is_naturals()) fail(ErrorKind::NaturalsUnsupported, "the naturals have no gaps");
}

bool is_gap(const NumericalSemigroup& ns, Int g) { return g > 0 && !ns.contains(g); }

// Least k >= 1 with k·δ >= c; Δ = ℕ (c = 0) is satisfied by every k.
Int least_nonnegative_k(const GammaSemimodule& d) {
  if (d.conductor() == 0) return 1;
  return std::max<Int>(1, ceil_div(d.conductor(), d.delta()));
}

}  // namespace

GammaSemimodule semimodule_from_generators(const NumericalSemigroup& ns, std::span<const Int> input) {
  if (input.empty()) fail(ErrorKind::EmptyInput, "no semimodule generators given");
  std::vector<Int> gens(input.begin(), input.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Int shift = gens.front();
  for (Int& x : gens) x = checked_sub(x, shift);

  // A generator is redundant iff it lies in y + (Γ \ {0}) for another one.
  std::vector<Int> minimal;
  for (Int x : gens) {
    bool redundant = false;
    for (Int y : gens) {
      if (y < x && ns.contains(x - y)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(x);
  }

  const Int m = ns.multiplicity();
  const Int window = checked_add(checked_add(minimal.back(), ns.conductor()), m);
  std::vector<bool> member(static_cast<std::size_t>(window), false);
  for (Int n = 0; n < window; ++n) {
    for (Int x : minimal) {
      if (x > n) break;
      if (ns.contains(n - x)) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  Int conductor = 0;
  for (Int n = window - 1; n >= 0; --n) {
    if (!member[static_cast<std::size_t>(n)]) {
      conductor = n + 1;
      break;
    }
  }

  GammaSemimodule d;
  d.generators_ = std::move(minimal);
  d.conductor_ = conductor;
  d.shift_ = shift;
  d.membership_ = BitTable(static_cast<std::size_t>(conductor + m));
  Int delta = 0;
  for (Int n = 0; n < conductor + m; ++n) {
    if (member[static_cast<std::size_t>(n)]) {
      d.membership_.set(static_cast<std::size_t>(n));
      if (n < conductor) ++delta;
    }
  }
  d.delta_ = delta;
  return d;
}

GammaSemimodule gap_semimodule(const NumericalSemigroup& ns, Int g) {
  if (!is_gap(ns, g)) fail(ErrorKind::NotAGap, std::to_string(g) + " is not a gap");
  return semimodule_from_generators(ns, {Int{0}, g});
}

Int wilf_gap(const NumericalSemigroup& ns, Int g) { return wilf_number(gap_semimodule(ns, g)); }

std::vector<GapWilf> gap_wilf_table(const NumericalSemigroup& ns) {
  std::vector<GapWilf> rows;
  if (ns.is_naturals()) return rows;
  const Int m = ns.multiplicity();
  const AperySet ap = apery_set(ns, m);
  // Residue class r holds the holes r, r + m, ..., w_r - m; k[r] counts them.
  std::vector<Int> k(static_cast<std::size_t>(m));
  for (Int r = 0; r < m; ++r) k[static_cast<std::size_t>(r)] = (ap.by_residue[static_cast<std::size_t>(r)] - r) / m;

  rows.reserve(ns.gaps().size());
  for (Int g : ns.gaps()) {
    const Int rg = g % m;
    const Int jg = g / m;
    // Hole r + jm lies in g + Γ iff j >= k[r'] + jg + carry, where
    // r' = (r - g) mod m and carry = [r < g mod m]. The holes that stay
    // uncovered are exactly the gaps of Δ.
    Int uncovered = 0;
    Int top = -1;
    auto scan = [&](Int r, Int rp, Int carry) {
      const Int u = std::min(k[static_cast<std::size_t>(rp)] + jg + carry, k[static_cast<std::size_t>(r)]);
      uncovered += u;
      if (u > 0) top = std::max(top, r + (u - 1) * m);
    };
    for (Int r = rg; r < m; ++r) scan(r, r - rg, 0);
    for (Int r = 0; r < rg; ++r) scan(r, r - rg + m, 1);
    GapWilf row;
    row.gap = g;
    row.conductor = top + 1;
    row.delta = row.conductor - uncovered;
    row.wilf = 2 * row.delta - row.conductor;
    rows.push_back(row);
  }
  return rows;
}

GapWilfExtremes wilf_gap_extremes(std::span<const GapWilf> table) {
  if (table.empty()) fail(ErrorKind::NaturalsUnsupported, "no gaps");
  GapWilfExtremes ext;
  ext.min = ext.max = table.front().wilf;
  for (const auto& row : table) {
    ext.min = std::min(ext.min, row.wilf);
    ext.max = std::max(ext.max, row.wilf);
  }
  for (const auto& row : table) {
    if (row.wilf == ext.min) ext.argmin_gaps.push_back(row.gap);
    if (row.wilf == ext.max) ext.argmax_gaps.push_back(row.gap);
  }
  return ext;
}

GapWilfExtremes wilf_gap_extremes(const NumericalSemigroup& ns) {
  require_not_naturals(ns);
  return wilf_gap_extremes(gap_wilf_table(ns));
}

BoundCheck check_bound_conjecture(const NumericalSemigroup& ns, const GapWilfExtremes& ext) {
  BoundCheck r;
  r.min_wg = ext.min;
  r.minus_wilf_e = -wilf_value(ns, ns.embedding_dimension());
  r.holds = r.min_wg >= r.minus_wilf_e;
  return r;
}

BoundCheck check_bound_conjecture(const NumericalSemigroup& ns) {
  return check_bound_conjecture(ns, wilf_gap_extremes(ns));
}

bool check_thm_4_2(const NumericalSemigroup& ns, const GapWilfExtremes& ext) {
  if (ext.max > wilf_value(ns, 4)) {
    inconsistency("max W(g) = " + std::to_string(ext.max) + " exceeds W(4) = " + std::to_string(wilf_value(ns, 4)));
  }
  return true;
}

bool check_thm_4_2(const NumericalSemigroup& ns) { return check_thm_4_2(ns, wilf_gap_extremes(ns)); }

bool check_prop_4_3(const NumericalSemigroup& ns, const GapWilfExtremes& ext) {
  const Int range = ext.max - ext.min;
  if (range >= 2 * ns.delta()) inconsistency("W(g) range " + std::to_string(range) + " >= 2*delta");
  if (is_symmetric(ns) && range >= ns.conductor()) {
    inconsistency("symmetric semigroup with W(g) range >= conductor");
  }
  return true;
}

bool check_prop_4_3(const NumericalSemigroup& ns) { return check_prop_4_3(ns, wilf_gap_extremes(ns)); }

bool gap_range_sharp_bound(const NumericalSemigroup& ns, const GapWilfExtremes& ext) {
  return ext.max - ext.min <= 2 * ns.delta() - 2;
}

void for_each_semimodule(const NumericalSemigroup& ns, const std::function<void(const GammaSemimodule&)>& visit) {
  require_not_naturals(ns);
  const std::vector<Int>& gaps = ns.gaps();
  std::vector<Int> chosen{0};
  // Depth-first over cliques of the "difference is a gap" graph, extending
  // only with larger gaps so each set appears once.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    visit(semimodule_from_generators(ns, chosen));
    for (std::size_t i = from; i < gaps.size(); ++i) {
      const Int g = gaps[i];
      bool compatible = true;
      for (std::size_t j = 1; j < chosen.size() && compatible; ++j) compatible = !ns.contains(g - chosen[j]);
      if (!compatible) continue;
      chosen.push_back(g);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
}

std::vector<GammaSemimodule> enumerate_semimodules(const NumericalSemigroup& ns) {
  std::vector<GammaSemimodule> out;
  for_each_semimodule(ns, [&](const GammaSemimodule& d) { out.push_back(d); });
  return out;
}

Int mu_gamma_delta(const NumericalSemigroup& ns) {
  Int k = 1;
  for_each_semimodule(ns, [&](const GammaSemimodule& d) { k = std::max(k, least_nonnegative_k(d)); });
  return k;
}

Int mu_delta_r(const NumericalSemigroup& ns, Int generator_count) {
  if (generator_count < 1 || generator_count > ns.multiplicity()) {
    fail(ErrorKind::InvalidArgument, "generator count must lie in [1, m]");
  }
  Int k = 0;
  bool any = false;
  for_each_semimodule(ns, [&](const GammaSemimodule& d) {
    if (d.generator_count() != generator_count) return;
    any = true;
    k = std::max(k, least_nonnegative_k(d));
  });
  if (!any) {
    fail(ErrorKind::NoSuchSemimodule, "no semimodule with " + std::to_string(generator_count) + " generators");
  }
  return k;
}

}  // namespace wilf
