#include "wilf/two_gen_lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "wilf/wilf_analysis.hpp"

namespace wilf {

namespace {

// x with (x * value) % modulus == 1, for coprime inputs.
Int inverse_mod(Int value, Int modulus) {
  Int r0 = modulus, r1 = value % modulus;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return ((t0 % modulus) + modulus) % modulus;
}

std::string pair_text(Int alpha, Int beta) { return "<" + std::to_string(alpha) + "," + std::to_string(beta) + ">"; }

}  // namespace

void validate_pair(Int alpha, Int beta) {
  if (alpha < 2 || beta <= alpha) {
    fail(ErrorKind::InvalidArgument, "need 2 <= alpha < beta, got " + pair_text(alpha, beta));
  }
  if (std::gcd(alpha, beta) != 1) fail(ErrorKind::NotCoprime, pair_text(alpha, beta) + " is not coprime");
  checked_mul(alpha, beta);
}

bool is_lattice_gap(Int alpha, Int beta, Int a, Int b) {
  return a >= 1 && a <= beta - 1 && b >= 1 && b <= alpha - 1 && a * alpha + b * beta < alpha * beta;
}

namespace {

// Gap -> (a, b) for one validated pair, with the inverse of β mod α cached.
class CoordMap {
 public:
  CoordMap(Int alpha, Int beta) : alpha_(alpha), beta_(beta) {
    validate_pair(alpha, beta);
    inverse_ = inverse_mod(beta % alpha, alpha);
  }

  LatticeGap operator()(Int g) const {
    const Int product = alpha_ * beta_;
    if (g <= 0 || g >= product) not_a_gap(g);
    // g ≡ -bβ (mod α) fixes b; a follows.
    const Int b = ((alpha_ - g % alpha_) % alpha_) * inverse_ % alpha_;
    const Int rest = product - g - b * beta_;
    if (b == 0 || rest <= 0 || rest % alpha_ != 0) not_a_gap(g);
    LatticeGap lg{alpha_, beta_, rest / alpha_, b, g};
    if (!is_lattice_gap(alpha_, beta_, lg.a, lg.b)) not_a_gap(g);
    return lg;
  }

 private:
  [[noreturn]] void not_a_gap(Int g) const {
    fail(ErrorKind::NotAGap, std::to_string(g) + " is not a gap of " + pair_text(alpha_, beta_));
  }

  Int alpha_;
  Int beta_;
  Int inverse_ = 0;
};

}  // namespace

LatticeGap gap_coords(Int alpha, Int beta, Int g) { return CoordMap(alpha, beta)(g); }

Int coords_to_gap(const LatticeGap& lg) {
  if (!is_lattice_gap(lg.alpha, lg.beta, lg.a, lg.b)) {
    fail(ErrorKind::NotAGap, "(" + std::to_string(lg.a) + "," + std::to_string(lg.b) + ") is outside the lattice triangle");
  }
  return lg.alpha * lg.beta - lg.a * lg.alpha - lg.b * lg.beta;
}

std::vector<LatticeGap> lattice_gaps(Int alpha, Int beta) {
  validate_pair(alpha, beta);
  std::vector<LatticeGap> out;
  for (Int a = 1; a < beta; ++a) {
    for (Int b = 1; b < alpha; ++b) {
      if (is_lattice_gap(alpha, beta, a, b)) out.push_back({alpha, beta, a, b, alpha * beta - a * alpha - b * beta});
    }
  }
  std::sort(out.begin(), out.end(), [](const LatticeGap& x, const LatticeGap& y) { return x.gap < y.gap; });
  return out;
}

std::pair<Int, Int> two_generators(const NumericalSemigroup& ns) {
  const auto& gens = ns.minimal_generators();
  if (gens.size() != 2) fail(ErrorKind::NotTwoGenerated, "semigroup has " + std::to_string(gens.size()) + " generators");
  return {gens[0], gens[1]};
}

namespace {

// Ap(Γ, m) by residue; least member of Γ ∩ (g + Γ) is then
// min over r of max(w_r, g + w_{(r - g) mod m}).
struct ResidueView {
  Int m = 1;
  std::vector<Int> w;

  explicit ResidueView(const NumericalSemigroup& ns)
      : m(ns.multiplicity()), w(apery_set(ns, ns.multiplicity()).by_residue) {}

  Int least_common(Int g) const {
    const Int rg = g % m;
    Int best = std::numeric_limits<Int>::max();
    for (Int r = 0; r < m; ++r) {
      const Int rp = r >= rg ? r - rg : r - rg + m;
      best = std::min(best, std::max(w[static_cast<std::size_t>(r)], g + w[static_cast<std::size_t>(rp)]));
    }
    return best;
  }
};

Int verified_least(const LatticeGap& lg, Int found) {
  const Int product = lg.alpha * lg.beta;
  if (found != product - lg.a * lg.alpha && found != product - lg.b * lg.beta) {
    inconsistency("min of the intersection for gap " + std::to_string(lg.gap) + " is " + std::to_string(found) +
                  ", neither alpha*beta - a*alpha nor alpha*beta - b*beta");
  }
  return found;
}

bool on_b_branch(const LatticeGap& lg, Int least) { return least == lg.alpha * lg.beta - lg.b * lg.beta; }

Int closed_wilf(const LatticeGap& lg, Int least) {
  const Int product = lg.alpha * lg.beta;
  const bool b_branch = on_b_branch(lg, least);
  const bool a_branch = least == product - lg.a * lg.alpha;
  const Int from_b = -(lg.a * lg.alpha - 2 * lg.a * lg.b);
  const Int from_a = -(lg.b * lg.beta - 2 * lg.a * lg.b);
  if (b_branch && a_branch && from_a != from_b) inconsistency("both closed-form branches apply and disagree");
  return b_branch ? from_b : from_a;
}

// c(Γ) = (α-1)(β-1) and δ(Γ) = (αβ - α - β + 1)/2, checked against Γ.
std::pair<Int, Int> two_gen_conductor_delta(const NumericalSemigroup& ns, Int alpha, Int beta) {
  const Int c_gamma = (alpha - 1) * (beta - 1);
  const Int delta_gamma = (alpha * beta - alpha - beta + 1) / 2;
  if (c_gamma != ns.conductor() || delta_gamma != ns.delta()) {
    inconsistency("two-generator conductor/delta formulas disagree with the semigroup");
  }
  return {c_gamma, delta_gamma};
}

SemimoduleClosedForms closed_forms(const LatticeGap& lg, Int least, Int c_gamma, Int delta_gamma) {
  SemimoduleClosedForms out;
  out.conductor = on_b_branch(lg, least) ? c_gamma - lg.a * lg.alpha : c_gamma - lg.b * lg.beta;
  out.delta = out.conductor - delta_gamma + lg.a * lg.b;
  return out;
}

}  // namespace

Int min_gamma_intersection(const NumericalSemigroup& ns, Int g) {
  const auto [alpha, beta] = two_generators(ns);
  const LatticeGap lg = gap_coords(alpha, beta, g);
  return verified_least(lg, ResidueView(ns).least_common(g));
}

LatticeBranch lattice_branch(const NumericalSemigroup& ns, const LatticeGap& lg) {
  return on_b_branch(lg, min_gamma_intersection(ns, lg.gap)) ? LatticeBranch::MinusBBeta : LatticeBranch::MinusAAlpha;
}

Int wilf_gap_closed_form(const NumericalSemigroup& ns, const LatticeGap& lg) {
  return closed_wilf(lg, min_gamma_intersection(ns, lg.gap));
}

SemimoduleClosedForms semimodule_closed_forms(const NumericalSemigroup& ns, const LatticeGap& lg) {
  const auto [c_gamma, delta_gamma] = two_gen_conductor_delta(ns, lg.alpha, lg.beta);
  return closed_forms(lg, min_gamma_intersection(ns, lg.gap), c_gamma, delta_gamma);
}

bool check_closed_forms(const NumericalSemigroup& ns, std::span<const GapWilf> sieve) {
  const auto [alpha, beta] = two_generators(ns);
  const auto [c_gamma, delta_gamma] = two_gen_conductor_delta(ns, alpha, beta);
  const ResidueView view(ns);
  const CoordMap coords(alpha, beta);
  for (const GapWilf& row : sieve) {
    const LatticeGap lg = coords(row.gap);
    const Int least = verified_least(lg, view.least_common(row.gap));
    const Int w = closed_wilf(lg, least);
    if (w != row.wilf) {
      inconsistency("closed-form W(" + std::to_string(row.gap) + ") = " + std::to_string(w) + ", sieve gives " +
                    std::to_string(row.wilf));
    }
    const SemimoduleClosedForms cf = closed_forms(lg, least, c_gamma, delta_gamma);
    if (cf.conductor != row.conductor || cf.delta != row.delta) {
      inconsistency("closed-form c/delta of the gap semimodule disagree with the sieve at g = " +
                    std::to_string(row.gap));
    }
  }
  return true;
}

bool check_symmetry(Int alpha, Int beta, std::span<const GapWilf> sieve) {
  validate_pair(alpha, beta);
  // W indexed by (a, b); only valid lattice points are filled.
  std::vector<Int> grid(static_cast<std::size_t>(beta * alpha), 0);
  auto at = [&](Int a, Int b) -> Int& { return grid[static_cast<std::size_t>(a * alpha + b)]; };
  const CoordMap coords(alpha, beta);
  for (const GapWilf& row : sieve) {
    const LatticeGap lg = coords(row.gap);
    at(lg.a, lg.b) = row.wilf;
  }
  for (Int a = 1; a < beta; ++a) {
    for (Int b = 1; b < alpha; ++b) {
      if (!is_lattice_gap(alpha, beta, a, b)) continue;
      if (is_lattice_gap(alpha, beta, a, alpha - b) && at(a, alpha - b) != -at(a, b)) {
        inconsistency("W(a, alpha-b) != -W(a, b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (is_lattice_gap(alpha, beta, beta - a, b) && at(beta - a, b) != -at(a, b)) {
        inconsistency("W(beta-a, b) != -W(a, b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  return true;
}

bool check_symmetry(Int alpha, Int beta) {
  validate_pair(alpha, beta);
  const auto ns = NumericalSemigroup::from_generators({alpha, beta});
  return check_symmetry(alpha, beta, gap_wilf_table(ns));
}

bool check_thm_4_15(const NumericalSemigroup& ns, std::span<const GapWilf> sieve) {
  const auto [alpha, beta] = two_generators(ns);
  for (const GapWilf& row : sieve) {
    if (3 * row.delta - row.conductor < 0) {
      inconsistency("W_Delta(3) < 0 for gap " + std::to_string(row.gap) + " of " + pair_text(alpha, beta));
    }
  }
  if (alpha >= 3 && alpha * beta - 2 * (alpha + beta) + 2 < 0) {
    inconsistency("alpha*beta - 2(alpha+beta) + 2 < 0 for " + pair_text(alpha, beta));
  }
  const GapWilfExtremes ext = wilf_gap_extremes(sieve);
  if (ext.max != -ext.min || ext.max >= ns.delta()) {
    inconsistency("max W(g) = -min W(g) < delta fails for " + pair_text(alpha, beta));
  }
  return true;
}

bool check_thm_4_15(Int alpha, Int beta) {
  validate_pair(alpha, beta);
  const auto ns = NumericalSemigroup::from_generators({alpha, beta});
  return check_thm_4_15(ns, gap_wilf_table(ns));
}

bool in_upper_triangle(const LatticeGap& lg) {
  return is_lattice_gap(lg.alpha, lg.beta, lg.a, lg.b) && lg.b <= lg.alpha / 2;
}

bool in_right_triangle(const LatticeGap& lg) {
  return is_lattice_gap(lg.alpha, lg.beta, lg.a, lg.b) && lg.a <= lg.beta / 2;
}

std::vector<LatticeRow> lattice_dump(Int alpha, Int beta) {
  validate_pair(alpha, beta);
  const auto ns = NumericalSemigroup::from_generators({alpha, beta});
  std::vector<LatticeRow> rows;
  const CoordMap coords(alpha, beta);
  for (const GapWilf& row : gap_wilf_table(ns)) rows.push_back({coords(row.gap), row.wilf});
  std::sort(rows.begin(), rows.end(), [](const LatticeRow& x, const LatticeRow& y) {
    return std::pair{x.point.b, x.point.a} < std::pair{y.point.b, y.point.a};
  });
  return rows;
}

std::string lattice_csv(std::span<const LatticeRow> rows) {
  std::ostringstream out;
  out << "a,b,gap,wilf\n";
  for (const auto& r : rows) out << r.point.a << ',' << r.point.b << ',' << r.point.gap << ',' << r.wilf << '\n';
  return out.str();
}

std::string lattice_svg(Int alpha, Int beta, std::span<const LatticeRow> rows) {
  constexpr Int kCell = 12;
  const Int width = (beta + 1) * kCell;
  const Int height = (alpha + 1) * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  for (const auto& r : rows) {
    const char* fill = r.wilf > 0 ? "#d7301f" : (r.wilf < 0 ? "#2b8cbe" : "#d9d9d9");
    out << "<rect x=\"" << r.point.a * kCell << "\" y=\"" << (alpha - r.point.b) * kCell << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << fill << "\"><title>g=" << r.point.gap << " W=" << r.wilf
        << "</title></rect>\n";
  }
  // Diagonal aα + bβ = αβ from (0, α) to (β, 0).
  out << "<line x1=\"0\" y1=\"0\" x2=\"" << beta * kCell << "\" y2=\"" << alpha * kCell
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace wilf
