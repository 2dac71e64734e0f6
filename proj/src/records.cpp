#include "wilf/records.hpp"

#include <cctype>
#include <charconv>

namespace wilf {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  return s;
}

Int parse_positive(std::string_view token, std::string_view whole) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    if (ec == std::errc::result_out_of_range) fail(ErrorKind::Overflow, "integer too large in '" + std::string(whole) + "'");
    fail(ErrorKind::ParseError, "bad integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty integer list");
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view token = std::string_view(s).substr(start, comma == std::string::npos ? s.npos : comma - start);
    out.push_back(parse_positive(token, s));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  const std::string s = strip(text);
  const std::size_t at = s.find('@');
  if (at != std::string::npos && s.find('@', at + 1) != std::string::npos) {
    fail(ErrorKind::ParseError, "more than one '@' in '" + s + "'");
  }
  const std::vector<Int> gens = parse_int_list(s.substr(0, at));
  for (Int g : gens) {
    if (g < 1) fail(ErrorKind::ParseError, "generators must be positive in '" + s + "'");
  }
  if (at == std::string::npos) return NumericalSemigroup::from_generators(gens);
  const Int threshold = parse_positive(std::string_view(s).substr(at + 1), s);
  if (threshold < 1) fail(ErrorKind::ParseError, "threshold must be positive in '" + s + "'");
  return NumericalSemigroup::with_threshold(gens, threshold);
}

nlohmann::ordered_json semigroup_record(const NumericalSemigroup& ns) {
  nlohmann::ordered_json j;
  j["generators"] = ns.minimal_generators();
  j["multiplicity"] = ns.multiplicity();
  j["frobenius"] = ns.frobenius();
  j["conductor"] = ns.conductor();
  j["genus"] = ns.genus();
  j["delta"] = ns.delta();
  j["embedding_dimension"] = ns.embedding_dimension();
  if (!ns.is_naturals()) j["type"] = type_of(ns);
  j["symmetric"] = is_symmetric(ns);
  return j;
}

std::string semigroup_record_csv(const NumericalSemigroup& ns) {
  std::string gens;
  for (Int g : ns.minimal_generators()) gens += (gens.empty() ? "" : " ") + std::to_string(g);
  std::string out = "generators,multiplicity,frobenius,conductor,genus,delta,embedding_dimension,type,symmetric\n";
  out += gens + ',' + std::to_string(ns.multiplicity()) + ',' + std::to_string(ns.frobenius()) + ',' +
         std::to_string(ns.conductor()) + ',' + std::to_string(ns.genus()) + ',' + std::to_string(ns.delta()) + ',' +
         std::to_string(ns.embedding_dimension()) + ',' + (ns.is_naturals() ? "" : std::to_string(type_of(ns))) + ',' +
         (is_symmetric(ns) ? "true" : "false") + '\n';
  return out;
}

}  // namespace wilf
