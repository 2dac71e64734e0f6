#include "wilf/wilf_analysis.hpp"

#include <numeric>

namespace wilf {

namespace {

void require_not_naturals(const NumericalSemigroup& ns, const char* what) {
  if (ns.is_naturals()) fail(ErrorKind::NaturalsUnsupported, std::string(what) + " is undefined for the naturals");
}

Int floor_div(Int a, Int b) { return a / b; }  // operands are nonnegative here

}  // namespace

IntervalStats interval_stats(const NumericalSemigroup& ns) {
  require_not_naturals(ns, "interval statistics");
  const Int m = ns.multiplicity();
  const Int c = ns.conductor();
  const Int f = ns.frobenius();

  IntervalStats st;
  st.multiplicity = m;
  st.L = (c - 1) / m;
  st.rho = c - st.L * m;
  if (st.rho < 2 || st.rho > m) inconsistency("rho = " + std::to_string(st.rho) + " outside [2, m]");

  st.n.assign(static_cast<std::size_t>(st.L + 1), 0);
  st.eta.assign(static_cast<std::size_t>(m - 1), 0);
  st.eps.assign(static_cast<std::size_t>(m - 1), 0);

  // Every block from ⌈c/m⌉ on is full, so scanning to (c + m)/m suffices.
  const Int last_block = (c + m) / m;
  for (Int alpha = 0; alpha <= last_block; ++alpha) {
    Int members = 0;
    Int below_f = 0;
    for (Int s = alpha * m; s < (alpha + 1) * m; ++s) {
      if (!ns.contains(s)) continue;
      ++members;
      if (s < f) ++below_f;
    }
    if (alpha <= st.L) st.n[static_cast<std::size_t>(alpha)] = below_f;
    if (members >= 1 && members <= m - 1) {
      st.eta[static_cast<std::size_t>(members - 1)] += 1;
      if (alpha <= st.L - 1) st.eps[static_cast<std::size_t>(members - 1)] += 1;
    }
  }

  const AperySet ap = apery_set(ns, m);
  st.eta_from_apery.resize(static_cast<std::size_t>(m - 1));
  for (Int j = 1; j <= m - 1; ++j) {
    st.eta_from_apery[static_cast<std::size_t>(j - 1)] =
        floor_div(ap.elements[static_cast<std::size_t>(j)], m) - floor_div(ap.elements[static_cast<std::size_t>(j - 1)], m);
  }
  if (st.eta != st.eta_from_apery) inconsistency("eta by block counting differs from the Apery formula");

  const Int sum_n = std::accumulate(st.n.begin(), st.n.end(), Int{0});
  if (sum_n != ns.delta()) inconsistency("delta != sum of n_alpha");
  Int weighted = 0;
  for (Int j = 1; j <= m - 1; ++j) weighted += j * st.eta[static_cast<std::size_t>(j - 1)];
  if (weighted + st.rho - m != ns.delta()) inconsistency("delta != sum j*eta_j + rho - m");
  return st;
}

Int mu(const NumericalSemigroup& ns) {
  if (ns.is_naturals()) return 1;
  return ceil_div(ns.conductor(), ns.delta());
}

MuReport mu_report(const NumericalSemigroup& ns) {
  MuReport r;
  r.mu = mu(ns);
  r.wilf_at_mu = wilf_value(ns, r.mu);
  r.embedding_dimension = ns.embedding_dimension();
  r.wilf_at_e = wilf_value(ns, r.embedding_dimension);
  r.gap_e_minus_mu = r.embedding_dimension - r.mu;
  return r;
}

WilfTypeCheck check_wilf_type(const NumericalSemigroup& ns, Int k) {
  require_not_naturals(ns, "the Wilf-type criterion");
  const IntervalStats st = interval_stats(ns);
  const Int m = st.multiplicity;

  WilfTypeCheck out;
  out.direct = wilf_value(ns, k);
  Int form = 0;
  for (Int nj : st.n) form = checked_add(form, checked_sub(checked_mul(k, nj), m));
  out.interval_form = checked_sub(checked_add(form, m), st.rho);
  out.holds = ns.conductor() <= checked_mul(k, ns.delta());
  if (out.holds != (out.interval_form >= 0)) {
    inconsistency("c <= k*delta and the block form disagree at k = " + std::to_string(k));
  }
  if (k == m) {
    Int excess = 0;
    for (Int nj : st.n) excess += nj - 1;
    const Int rewritten = m * excess + m - st.rho;
    if ((rewritten >= 0) != out.holds) inconsistency("k = m rewriting disagrees with c <= m*delta");
  }
  return out;
}

std::optional<Int> max_family_parameter(const NumericalSemigroup& ns) {
  const Int m = ns.multiplicity();
  const auto& gens = ns.minimal_generators();
  if (ns.is_naturals() || m < 2 || static_cast<Int>(gens.size()) != m) return std::nullopt;
  if (gens[1] % m != 1) return std::nullopt;
  const Int q = gens[1] / m;
  if (q < 1) return std::nullopt;
  for (Int i = 1; i < m; ++i) {
    if (gens[static_cast<std::size_t>(i)] != q * m + i) return std::nullopt;
  }
  return q;
}

std::string to_string(ExtremeClass::Kind kind) {
  switch (kind) {
    case ExtremeClass::Kind::Naturals: return "Naturals";
    case ExtremeClass::Kind::MaxFamily: return "MaxFamily";
    case ExtremeClass::Kind::TwoGenSymmetric: return "TwoGenSymmetric";
    case ExtremeClass::Kind::Other: return "Other";
  }
  return "Other";
}

ExtremeClass classify_extreme(const NumericalSemigroup& ns) {
  using Kind = ExtremeClass::Kind;
  if (ns.is_naturals()) return {Kind::Naturals, 0, 0};
  const Int m = ns.multiplicity();
  const auto family = max_family_parameter(ns);
  if (family) {
    if (wilf_value(ns, m) != 0) inconsistency("family member with W(m) != 0");
    if (type_of(ns) != m - 1) inconsistency("family member with type != m - 1");
  }
  const auto& gens = ns.minimal_generators();
  if (gens.size() == 2) return {Kind::TwoGenSymmetric, gens[0], gens[1]};
  if (family) return {Kind::MaxFamily, m, *family};
  return {Kind::Other, 0, 0};
}

Int remark_B(const NumericalSemigroup& ns) {
  require_not_naturals(ns, "B");
  const Int m = ns.multiplicity();
  const AperySet ap = apery_set(ns, m);
  Int sum = 0;
  for (Int w : ap.elements) sum += w / m;
  const Int b = (m - 1) * (ap.elements.back() / m) - sum;
  if (b < 0) inconsistency("B < 0");
  if ((b == 0) != max_family_parameter(ns).has_value()) {
    inconsistency("B = 0 does not match the <m, qm+1, ...> family");
  }
  return b;
}

FrogoReport frogo_equality_check(const NumericalSemigroup& ns) {
  require_not_naturals(ns, "the equality classification");
  FrogoReport r;
  r.equality = wilf_value(ns, ns.embedding_dimension()) == 0;
  r.two_generated = ns.embedding_dimension() == 2;
  r.max_family = max_family_parameter(ns).has_value();
  r.conjecture_consistent = r.equality == (r.two_generated || r.max_family);
  return r;
}

std::optional<Int> check_wilf_zero_bound(const NumericalSemigroup& ns) {
  if (ns.is_naturals() || ns.conductor() % ns.delta() != 0) return std::nullopt;
  const Int k = ns.conductor() / ns.delta();
  const IntervalStats st = interval_stats(ns);
  if (k * ns.delta() > (st.L + 1) * st.multiplicity || k > st.multiplicity) {
    inconsistency("W(k) = 0 with k = " + std::to_string(k) + " beyond the multiplicity bound");
  }
  return k;
}

}  // namespace wilf
