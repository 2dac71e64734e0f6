#include "wilf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace wilf {

namespace {

std::vector<Int> sorted_unique(std::span<const Int> values) {
  std::vector<Int> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join(std::span<const Int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

// Least member in each residue class mod gens.front(), by Dijkstra on the
// residue graph with an edge r -> r + a for every generator a.
std::vector<Int> residue_minima(const std::vector<Int>& gens) {
  const Int m = gens.front();
  constexpr Int kUnreached = -1;
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      Int nd = checked_add(d, gens[i]);
      auto nr = static_cast<std::size_t>(nd % m);
      if (dist[nr] == kUnreached || nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, static_cast<Int>(nr));
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : minimal_generators_{1}, multiplicity_(1), conductor_(0), membership_(2) {
  membership_.set(0);
  membership_.set(1);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> input) {
  if (input.empty()) fail(ErrorKind::EmptyInput, "no generators given");
  for (Int a : input) {
    if (a < 1) fail(ErrorKind::InvalidArgument, "generator " + std::to_string(a) + " is not positive");
  }
  std::vector<Int> gens = sorted_unique(input);
  Int g = 0;
  for (Int a : gens) g = std::gcd(g, a);
  if (g != 1) {
    fail(ErrorKind::NotCofinite, "gcd(" + join(gens) + ") = " + std::to_string(g));
  }
  if (gens.front() == 1) return NumericalSemigroup();

  const Int m = gens.front();
  std::vector<Int> minima = residue_minima(gens);
  const Int conductor = checked_add(*std::max_element(minima.begin(), minima.end()) - m, 1);
  const Int size = checked_add(conductor, checked_mul(2, m));
  BitTable table(static_cast<std::size_t>(size));
  for (Int n = 0; n < size; ++n) {
    if (n >= minima[static_cast<std::size_t>(n % m)]) table.set(static_cast<std::size_t>(n));
  }
  return from_table(std::move(table), conductor);
}

NumericalSemigroup NumericalSemigroup::with_threshold(std::span<const Int> input, Int threshold) {
  if (threshold < 1) fail(ErrorKind::InvalidArgument, "threshold must be positive");
  for (Int a : input) {
    if (a < 1) fail(ErrorKind::InvalidArgument, "generator " + std::to_string(a) + " is not positive");
  }
  std::vector<Int> gens = sorted_unique(input);
  std::erase_if(gens, [&](Int a) { return a >= threshold; });

  // Coin-change sieve below the threshold; everything from it on is a member.
  std::vector<bool> below(static_cast<std::size_t>(threshold), false);
  below[0] = true;
  Int conductor = 0;
  for (Int n = 1; n < threshold; ++n) {
    bool hit = false;
    for (Int a : gens) {
      if (a > n) break;
      if (below[static_cast<std::size_t>(n - a)]) {
        hit = true;
        break;
      }
    }
    below[static_cast<std::size_t>(n)] = hit;
    if (!hit) conductor = n + 1;
  }
  if (conductor == 0) return NumericalSemigroup();

  Int m = 1;
  while (m < threshold && !below[static_cast<std::size_t>(m)]) ++m;
  const Int size = checked_add(conductor, checked_mul(2, m));
  BitTable table(static_cast<std::size_t>(size));
  for (Int n = 0; n < size; ++n) {
    if (n >= conductor || below[static_cast<std::size_t>(n)]) table.set(static_cast<std::size_t>(n));
  }
  return from_table(std::move(table), conductor);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> input) {
  std::vector<Int> gaps = sorted_unique(input);
  if (gaps.empty()) return NumericalSemigroup();
  if (gaps.front() < 1) fail(ErrorKind::InvalidArgument, "gaps must be positive");
  const Int conductor = gaps.back() + 1;
  std::vector<bool> member(static_cast<std::size_t>(conductor), true);
  for (Int g : gaps) member[static_cast<std::size_t>(g)] = false;
  // Closed under addition iff no gap is a sum of two members.
  for (Int g : gaps) {
    for (Int s = 1; s <= g / 2; ++s) {
      if (member[static_cast<std::size_t>(s)] && member[static_cast<std::size_t>(g - s)]) {
        fail(ErrorKind::InvalidArgument,
             "complement of {" + join(gaps) + "} is not closed: " + std::to_string(s) + " + " +
                 std::to_string(g - s) + " = " + std::to_string(g));
      }
    }
  }
  Int m = 1;
  while (m < conductor && !member[static_cast<std::size_t>(m)]) ++m;
  const Int size = conductor + 2 * m;
  BitTable table(static_cast<std::size_t>(size));
  for (Int n = 0; n < size; ++n) {
    if (n >= conductor || member[static_cast<std::size_t>(n)]) table.set(static_cast<std::size_t>(n));
  }
  return from_table(std::move(table), conductor);
}

NumericalSemigroup NumericalSemigroup::from_table(BitTable table, Int conductor) {
  if (conductor == 0) return NumericalSemigroup();
  NumericalSemigroup ns;
  ns.conductor_ = conductor;
  ns.membership_ = std::move(table);
  ns.gaps_.clear();
  for (Int n = 1; n < conductor; ++n) {
    if (!ns.membership_.test(static_cast<std::size_t>(n))) ns.gaps_.push_back(n);
  }
  Int m = 1;
  while (!ns.contains(m)) ++m;
  ns.multiplicity_ = m;

  // Minimal generators: m together with the elements of Ap(Γ, m) \ {0} that
  // are not a member plus another nonzero Apéry element.
  AperySet ap = apery_set(ns, m);
  ns.minimal_generators_ = {m};
  for (std::size_t i = 1; i < ap.elements.size(); ++i) {
    const Int w = ap.elements[i];
    bool decomposable = false;
    for (std::size_t j = 1; j < i && !decomposable; ++j) {
      decomposable = ns.contains(w - ap.elements[j]);
    }
    if (!decomposable) ns.minimal_generators_.push_back(w);
  }
  return ns;
}

AperySet apery_set(const NumericalSemigroup& ns, Int s) {
  if (s <= 0 || !ns.contains(s)) {
    fail(ErrorKind::NotAMember, std::to_string(s) + " is not a nonzero element of the semigroup");
  }
  AperySet ap;
  ap.modulus = s;
  ap.by_residue.assign(static_cast<std::size_t>(s), -1);
  Int filled = 0;
  for (Int n = 0; filled < s; ++n) {
    auto r = static_cast<std::size_t>(n % s);
    if (ap.by_residue[r] < 0 && ns.contains(n)) {
      ap.by_residue[r] = n;
      ++filled;
    }
  }
  ap.elements = ap.by_residue;
  std::sort(ap.elements.begin(), ap.elements.end());
  return ap;
}

bool divides(const NumericalSemigroup& ns, Int s, Int t) {
  if (!ns.contains(s)) fail(ErrorKind::NotAMember, std::to_string(s) + " is not in the semigroup");
  if (!ns.contains(t)) fail(ErrorKind::NotAMember, std::to_string(t) + " is not in the semigroup");
  return ns.contains(t - s);
}

TypeInfo type_info(const NumericalSemigroup& ns) {
  if (ns.is_naturals()) fail(ErrorKind::NaturalsHasNoType, "the naturals have no type");
  const AperySet ap = apery_set(ns, ns.multiplicity());
  const auto& w = ap.elements;
  TypeInfo info;
  for (std::size_t i = 1; i < w.size(); ++i) {
    bool maximal = true;
    bool minimal = true;
    for (std::size_t j = 1; j < w.size(); ++j) {
      if (j == i) continue;
      if (w[j] > w[i] && ns.contains(w[j] - w[i])) maximal = false;
      if (w[j] < w[i] && ns.contains(w[i] - w[j])) minimal = false;
    }
    info.type += maximal ? 1 : 0;
    info.min_apery_count += minimal ? 1 : 0;
  }
  return info;
}

bool is_symmetric(const NumericalSemigroup& ns) {
  const Int f = ns.frobenius();
  bool reflection = true;
  for (Int z = 0; z <= f && reflection; ++z) {
    reflection = ns.contains(z) != ns.contains(f - z);
  }
  const bool balanced = ns.conductor() == 2 * ns.delta();
  if (reflection != balanced) {
    inconsistency("symmetry characterizations disagree for conductor " + std::to_string(ns.conductor()));
  }
  return reflection;
}

std::vector<bool> sieve_from_generators(std::span<const Int> gens, Int limit) {
  std::vector<bool> member(static_cast<std::size_t>(std::max<Int>(limit, 0)), false);
  if (limit <= 0) return member;
  member[0] = true;
  for (Int n = 1; n < limit; ++n) {
    for (Int a : gens) {
      if (a <= n && member[static_cast<std::size_t>(n - a)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return member;
}

}  // namespace wilf
