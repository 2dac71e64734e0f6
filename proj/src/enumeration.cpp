#include "wilf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wilf/semimodule.hpp"
#include "wilf/two_gen_lattice.hpp"
#include "wilf/wilf_analysis.hpp"

namespace wilf {

namespace {

using Json = nlohmann::ordered_json;

// Semigroup-tree node. decs[i] is the number of ways to write i = x + y with
// x <= y both members; members are exactly the i with decs[i] > 0 and the
// minimal generators are those with decs[i] == 1.
struct TreeNode {
  std::vector<std::uint32_t> decs;
  Int conductor = 0;
  Int multiplicity = 1;
  Int genus = 0;

  static TreeNode naturals(Int max_genus) {
    TreeNode n;
    n.decs.resize(static_cast<std::size_t>(3 * max_genus + 4));
    for (std::size_t i = 0; i < n.decs.size(); ++i) n.decs[i] = static_cast<std::uint32_t>(i / 2 + 1);
    return n;
  }

  // Children remove a minimal generator x with c <= x <= c + m; the upper
  // end only matters for ℕ, whose generator 1 equals c + m.
  template <typename F>
  void for_each_child(F&& f) const {
    for (Int x = std::max<Int>(conductor, 1); x <= conductor + multiplicity; ++x) {
      if (decs[static_cast<std::size_t>(x)] != 1) continue;
      TreeNode child = *this;
      child.conductor = x + 1;
      child.genus = genus + 1;
      if (x == multiplicity) child.multiplicity = multiplicity + 1;
      for (std::size_t i = static_cast<std::size_t>(x); i < decs.size(); ++i) {
        if (decs[i - static_cast<std::size_t>(x)] > 0) --child.decs[i];
      }
      f(child);
    }
  }

  NumericalSemigroup semigroup() const {
    std::vector<Int> gaps;
    for (Int i = 1; i < conductor; ++i) {
      if (decs[static_cast<std::size_t>(i)] == 0) gaps.push_back(i);
    }
    return NumericalSemigroup::from_gaps(gaps);
  }
};

std::string counts_text(const std::vector<std::uint64_t>& counts) {
  std::string s;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (g) s += ' ';
    s += std::to_string(counts[g]);
  }
  return s;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void take(const std::vector<std::uint64_t>& progress) {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_) {
      fail(ErrorKind::ResourceLimit, "node budget " + std::to_string(limit_) +
                                         " exhausted; partial per-genus counts: " + counts_text(progress));
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

template <typename Visit>
void walk(const TreeNode& node, Int max_genus, Budget& budget, std::vector<std::uint64_t>& counts, Visit& visit) {
  budget.take(counts);
  counts[static_cast<std::size_t>(node.genus)] += 1;
  visit(node);
  if (node.genus == max_genus) return;
  node.for_each_child([&](const TreeNode& child) { walk(child, max_genus, budget, counts, visit); });
}

}  // namespace

std::uint64_t node_budget_from_env() {
  if (const char* env = std::getenv("WILF_LAB_NODE_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, std::string("WILF_LAB_NODE_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

std::vector<std::uint64_t> enumerate_genus(Int max_genus, const std::function<void(const NumericalSemigroup&)>& visit,
                                           const EnumerationOptions& options) {
  if (max_genus < 0) fail(ErrorKind::InvalidArgument, "max genus must be nonnegative");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_genus + 1), 0);
  Budget budget(options.node_budget);
  auto on_node = [&](const TreeNode& node) { visit(node.semigroup()); };
  walk(TreeNode::naturals(max_genus), max_genus, budget, counts, on_node);
  return counts;
}

std::vector<std::uint64_t> count_by_genus(Int max_genus, const EnumerationOptions& options) {
  if (max_genus < 0) fail(ErrorKind::InvalidArgument, "max genus must be nonnegative");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_genus + 1), 0);
  Budget budget(options.node_budget);
  auto ignore = [](const TreeNode&) {};
  walk(TreeNode::naturals(max_genus), max_genus, budget, counts, ignore);
  return counts;
}

OracleResult oracle_enumerate(Int max_genus) {
  if (max_genus < 0) fail(ErrorKind::InvalidArgument, "max genus must be nonnegative");
  if (max_genus > 10) fail(ErrorKind::ResourceLimit, "the subset oracle is limited to genus 10");
  const Int width = 2 * max_genus;
  OracleResult out;
  out.counts.assign(static_cast<std::size_t>(max_genus + 1), 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << width); ++mask) {
    const Int genus = std::popcount(mask);
    if (genus > max_genus) continue;
    auto is_gap = [&](Int n) { return n >= 1 && n <= width && ((mask >> (n - 1)) & 1U); };
    bool closed = true;
    for (Int x = 1; x <= width && closed; ++x) {
      if (!is_gap(x)) continue;
      for (Int y = 1; y <= x / 2 && closed; ++y) closed = is_gap(y) || is_gap(x - y);
    }
    if (!closed) continue;
    out.counts[static_cast<std::size_t>(genus)] += 1;
    std::vector<Int> gaps;
    for (Int n = 1; n <= width; ++n) {
      if (is_gap(n)) gaps.push_back(n);
    }
    out.gap_sets.push_back(std::move(gaps));
  }
  std::sort(out.gap_sets.begin(), out.gap_sets.end());
  return out;
}

std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::Wilf: return "wilf";
    case Predicate::Bound: return "bound";
    case Predicate::Frogo: return "frogo";
    case Predicate::RangeSharp: return "range_sharp";
    case Predicate::Thm32: return "thm32";
    case Predicate::WilfAtTwo: return "wilf_at_2";
    case Predicate::MuType: return "mu_type";
    case Predicate::BlockSums: return "block_sums";
    case Predicate::Intervals: return "intervals";
    case Predicate::AperyDefect: return "apery_defect";
    case Predicate::WilfZero: return "wilf_zero";
    case Predicate::Thm42: return "thm42";
    case Predicate::Prop43: return "prop43";
    case Predicate::WilfAtFour: return "wilf_at_4";
    case Predicate::BoundTransfer: return "bound_transfer";
    case Predicate::Thm415TwoGen: return "thm415_twogen";
    case Predicate::MuHist: return "mu_hist";
  }
  return "unknown";
}

namespace {
constexpr Predicate kAllPredicates[] = {
    Predicate::Wilf,   Predicate::Bound,     Predicate::Frogo,  Predicate::RangeSharp, Predicate::Thm32,
    Predicate::WilfAtTwo, Predicate::MuType,    Predicate::BlockSums, Predicate::Intervals,   Predicate::AperyDefect,
    Predicate::WilfZero, Predicate::Thm42,     Predicate::Prop43, Predicate::WilfAtFour,       Predicate::BoundTransfer,
    Predicate::Thm415TwoGen, Predicate::MuHist,
};
}  // namespace

std::vector<Predicate> parse_predicates(const std::string& comma_list) {
  std::vector<Predicate> out;
  std::stringstream in(comma_list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::erase_if(item, [](unsigned char ch) { return std::isspace(ch) != 0; });
    if (item.empty()) continue;
    if (item == "all") {
      out.assign(std::begin(kAllPredicates), std::end(kAllPredicates));
      return out;
    }
    auto it = std::find_if(std::begin(kAllPredicates), std::end(kAllPredicates),
                           [&](Predicate p) { return predicate_name(p) == item; });
    if (it == std::end(kAllPredicates)) fail(ErrorKind::InvalidArgument, "unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "no checks selected");
  return out;
}

bool is_conjecture(Predicate p) {
  return p == Predicate::Wilf || p == Predicate::Bound || p == Predicate::Frogo || p == Predicate::RangeSharp;
}

void Tally::merge(const Tally& other) {
  checked += other.checked;
  satisfied += other.satisfied;
  violated += other.violated;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(w);
  }
}

void SurveyReport::merge(const SurveyReport& other) {
  if (per_genus.size() < other.per_genus.size()) per_genus.resize(other.per_genus.size(), 0);
  for (std::size_t g = 0; g < other.per_genus.size(); ++g) per_genus[g] += other.per_genus[g];
  for (const auto& [name, tally] : other.tallies) tallies[name].merge(tally);
  for (const auto& [key, count] : other.mu_hist) mu_hist[key] += count;
  for (const auto& gens : other.counterexamples) {
    if (std::find(counterexamples.begin(), counterexamples.end(), gens) == counterexamples.end()) {
      counterexamples.push_back(gens);
    }
  }
}

namespace {

std::string gens_text(const NumericalSemigroup& ns) {
  std::string s = "<";
  const auto& gens = ns.minimal_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i]);
  return s + ">";
}

class Evaluator {
 public:
  explicit Evaluator(const SurveyOptions& options) : options_(options) {
    for (Predicate p : options.predicates) selected_[static_cast<std::size_t>(p)] = true;
  }

  bool wants(Predicate p) const { return selected_[static_cast<std::size_t>(p)]; }

  // Evaluates every selected predicate on one Γ ≠ ℕ; appends a JSONL line.
  void run(const NumericalSemigroup& ns, SurveyReport& report, std::string* out) const {
    const Int e = ns.embedding_dimension();
    const Int m = ns.multiplicity();
    const Int type = type_of(ns);
    const Int mu_value = mu(ns);
    const std::vector<GapWilf> table = gap_wilf_table(ns);
    const GapWilfExtremes ext = wilf_gap_extremes(table);
    Json verdicts = Json::object();

    auto record = [&](const std::string& name, bool ok, bool conjecture) {
      Tally& t = report.tallies[name];
      ++t.checked;
      verdicts[name] = ok;
      if (ok) {
        ++t.satisfied;
        return;
      }
      ++t.violated;
      if (t.witnesses.size() < Tally::kMaxWitnesses) t.witnesses.push_back(ns.minimal_generators());
      if (!conjecture) inconsistency(name + " violated by " + gens_text(ns));
      if (report.counterexamples.empty() || report.counterexamples.back() != ns.minimal_generators()) {
        report.counterexamples.push_back(ns.minimal_generators());
      }
    };
    // Theorem checks that throw on their own; tag the semigroup and rethrow.
    auto guarded = [&](const std::string& name, auto&& body) {
      try {
        body();
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::InternalInconsistency) throw;
        Tally& t = report.tallies[name];
        ++t.checked;
        ++t.violated;
        inconsistency(name + " violated by " + gens_text(ns) + ": " + err.what());
      }
      record(name, true, false);
    };

    if (wants(Predicate::Wilf)) record("wilf", wilf_value(ns, e) >= 0, true);
    if (wants(Predicate::Bound)) record("bound", check_bound_conjecture(ns, ext).holds, true);
    if (wants(Predicate::Frogo)) record("frogo", frogo_equality_check(ns).conjecture_consistent, true);
    if (wants(Predicate::RangeSharp)) record("range_sharp", gap_range_sharp_bound(ns, ext), true);
    if (wants(Predicate::Thm32)) {
      const Int at_m = wilf_value(ns, m);
      record("thm32", at_m >= 0 && ((at_m == 0) == max_family_parameter(ns).has_value()), false);
    }
    if (wants(Predicate::WilfAtTwo)) {
      const Int at_2 = wilf_value(ns, 2);
      record("wilf_at_2", at_2 <= 0 && ((at_2 == 0) == is_symmetric(ns)), false);
    }
    if (wants(Predicate::MuType)) record("mu_type", mu_value <= type + 1, false);
    if (wants(Predicate::BlockSums)) {
      guarded("block_sums", [&] {
        for (Int k = 2; k <= m; ++k) check_wilf_type(ns, k);
      });
    }
    if (wants(Predicate::Intervals)) guarded("intervals", [&] { interval_stats(ns); });
    if (wants(Predicate::AperyDefect)) guarded("apery_defect", [&] { remark_B(ns); });
    if (wants(Predicate::WilfZero)) guarded("wilf_zero", [&] { check_wilf_zero_bound(ns); });
    if (wants(Predicate::Thm42)) guarded("thm42", [&] { check_thm_4_2(ns, ext); });
    if (wants(Predicate::Prop43)) guarded("prop43", [&] { check_prop_4_3(ns, ext); });
    if (wants(Predicate::WilfAtFour) && e >= 4 && ext.max >= 0) record("wilf_at_4", wilf_value(ns, 4) >= 0, false);
    if (wants(Predicate::BoundTransfer) && ext.max >= -wilf_value(ns, e - 2)) {
      record("bound_transfer", ext.min >= -wilf_value(ns, e), false);
    }
    if (wants(Predicate::Thm415TwoGen) && e == 2) {
      guarded("thm415_twogen", [&] {
        const auto [alpha, beta] = two_generators(ns);
        check_closed_forms(ns, table);
        check_symmetry(alpha, beta, table);
        check_thm_4_15(ns, table);
      });
    }
    if (wants(Predicate::MuHist)) report.mu_hist[{mu_value, e, type + 1}] += 1;
    for (const auto& custom : options_.custom) record(custom.name, custom.holds(ns), true);

    if (out != nullptr) {
      Json line;
      line["generators"] = ns.minimal_generators();
      line["genus"] = ns.genus();
      line["conductor"] = ns.conductor();
      line["delta"] = ns.delta();
      line["e"] = e;
      line["m"] = m;
      line["type"] = type;
      line["mu"] = mu_value;
      line["wilf_at_e"] = wilf_value(ns, e);
      line["min_wg"] = ext.min;
      line["max_wg"] = ext.max;
      line["verdicts"] = std::move(verdicts);
      *out += line.dump();
      *out += '\n';
    }
  }

 private:
  const SurveyOptions& options_;
  bool selected_[std::size(kAllPredicates)] = {};
};

// A unit of work in tree preorder: a single shallow node, or a whole
// subtree rooted at the split depth.
struct Chunk {
  TreeNode root;
  bool subtree = false;
};

void collect_chunks(const TreeNode& node, Int split, Int max_genus, std::vector<Chunk>& chunks) {
  if (node.genus >= split || node.genus == max_genus) {
    chunks.push_back({node, true});
    return;
  }
  chunks.push_back({node, false});
  node.for_each_child([&](const TreeNode& child) { collect_chunks(child, split, max_genus, chunks); });
}

Json summary_json(const SurveyReport& report) {
  Json s;
  s["max_genus"] = report.max_genus;
  s["per_genus"] = report.per_genus;
  Json tallies = Json::object();
  for (const auto& [name, t] : report.tallies) {
    tallies[name] = {{"checked", t.checked}, {"satisfied", t.satisfied}, {"violated", t.violated},
                     {"witnesses", t.witnesses}};
  }
  s["tallies"] = std::move(tallies);
  s["counterexamples"] = report.counterexamples;
  Json hist = Json::array();
  for (const auto& [key, count] : report.mu_hist) {
    hist.push_back({{"mu", std::get<0>(key)}, {"e", std::get<1>(key)}, {"t_plus_1", std::get<2>(key)}, {"count", count}});
  }
  s["mu_hist"] = std::move(hist);
  return Json{{"summary", std::move(s)}};
}

}  // namespace

SurveyReport survey(const SurveyOptions& options) {
  if (options.max_genus < 1) fail(ErrorKind::InvalidArgument, "survey needs max genus >= 1");
  if (options.predicates.empty() && options.custom.empty()) fail(ErrorKind::InvalidArgument, "no checks selected");
  const Evaluator evaluator(options);
  const Int max_genus = options.max_genus;

  std::vector<Chunk> chunks;
  collect_chunks(TreeNode::naturals(max_genus), std::max<Int>(options.split_genus, 0), max_genus, chunks);

  std::vector<SurveyReport> partial(chunks.size());
  std::vector<std::optional<std::string>> pending(chunks.size());
  Budget budget(options.node_budget);
  std::mutex sink_mutex;
  std::size_t next_to_write = 0;

  auto publish = [&](std::size_t index, std::string text) {
    if (options.jsonl == nullptr) return;
    std::lock_guard lock(sink_mutex);
    pending[index] = std::move(text);
    while (next_to_write < pending.size() && pending[next_to_write].has_value()) {
      *options.jsonl << *pending[next_to_write];
      pending[next_to_write].reset();
      ++next_to_write;
    }
  };

  auto process = [&](std::size_t index) {
    SurveyReport& rep = partial[index];
    rep.per_genus.assign(static_cast<std::size_t>(max_genus + 1), 0);
    std::string text;
    std::string* out = options.jsonl != nullptr ? &text : nullptr;
    auto visit = [&](const TreeNode& node) {
      if (node.genus > 0) evaluator.run(node.semigroup(), rep, out);
    };
    if (chunks[index].subtree) {
      walk(chunks[index].root, max_genus, budget, rep.per_genus, visit);
    } else {
      budget.take(rep.per_genus);
      rep.per_genus[static_cast<std::size_t>(chunks[index].root.genus)] += 1;
      visit(chunks[index].root);
    }
    publish(index, std::move(text));
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::atomic<bool> stop{false};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (!stop.load()) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= chunks.size()) return;
          try {
            process(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            stop = true;
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  SurveyReport report;
  report.max_genus = max_genus;
  report.per_genus.assign(static_cast<std::size_t>(max_genus + 1), 0);
  for (const auto& p : partial) report.merge(p);
  if (options.jsonl != nullptr) *options.jsonl << summary_json(report).dump() << '\n';
  return report;
}

std::string mu_hist_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "mu,e,t_plus_1,count\n";
  for (const auto& [key, count] : report.mu_hist) {
    out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ',' << count << '\n';
  }
  return out.str();
}

}  // namespace wilf
