#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct EnumerationOptions {
  /// Maximum number of tree nodes visited before ResourceLimit is raised.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Node budget from WILF_LAB_NODE_BUDGET when set, else the default.
std::uint64_t node_budget_from_env();

/// Visits every numerical semigroup of genus <= max_genus exactly once,
/// depth-first from ℕ, children ordered by the removed generator. Returns
/// the number of semigroups per genus. On budget exhaustion throws
/// ResourceLimit whose message reports the partial per-genus counts.
std::vector<std::uint64_t> enumerate_genus(Int max_genus, const std::function<void(const NumericalSemigroup&)>& visit,
                                           const EnumerationOptions& options = {});

/// Per-genus counts only.
std::vector<std::uint64_t> count_by_genus(Int max_genus, const EnumerationOptions& options = {});

struct OracleResult {
  std::vector<std::uint64_t> counts;
  /// Gap sets, each ascending, all sets in lexicographic order.
  std::vector<std::vector<Int>> gap_sets;
};

/// Brute force over subsets of [1, 2·max_genus] whose complement is closed
/// under addition. Exponential; throws ResourceLimit above genus 10.
OracleResult oracle_enumerate(Int max_genus);

enum class Predicate {
  // conjectures: counterexamples are recorded
  Wilf,
  Bound,
  Frogo,
  RangeSharp,
  // theorems: a violation aborts with InternalInconsistency
  Thm32,
  WilfAtTwo,
  MuType,
  BlockSums,
  Intervals,
  AperyDefect,
  WilfZero,
  Thm42,
  Prop43,
  WilfAtFour,
  BoundTransfer,
  Thm415TwoGen,
  // aggregation only
  MuHist,
};

std::string predicate_name(Predicate p);
/// Throws InvalidArgument for unknown names. "all" selects every predicate.
std::vector<Predicate> parse_predicates(const std::string& comma_list);
bool is_conjecture(Predicate p);

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t violated = 0;
  /// Generator lists of the first violations (at most kMaxWitnesses).
  std::vector<std::vector<Int>> witnesses;

  static constexpr std::size_t kMaxWitnesses = 20;
  void merge(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// A user-supplied predicate treated like a conjecture.
struct CustomCheck {
  std::string name;
  std::function<bool(const NumericalSemigroup&)> holds;
};

struct SurveyOptions {
  Int max_genus = 1;
  std::vector<Predicate> predicates;
  std::vector<CustomCheck> custom;
  unsigned jobs = 1;
  /// Tree depth at which subtrees are handed to workers.
  Int split_genus = 4;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// JSONL sink, one line per semigroup plus a final summary line.
  std::ostream* jsonl = nullptr;
};

struct SurveyReport {
  Int max_genus = 0;
  std::vector<std::uint64_t> per_genus;
  std::map<std::string, Tally> tallies;
  /// (μ, e, t + 1) -> count
  std::map<std::tuple<Int, Int, Int>, std::uint64_t> mu_hist;
  /// Distinct generator lists violating any conjecture.
  std::vector<std::vector<Int>> counterexamples;

  void merge(const SurveyReport& other);
  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

/// Applies the selected predicates to every Γ ≠ ℕ of genus <= max_genus.
/// Output and report are identical for any `jobs`.
SurveyReport survey(const SurveyOptions& options);

std::string mu_hist_csv(const SurveyReport& report);

}  // namespace wilf
