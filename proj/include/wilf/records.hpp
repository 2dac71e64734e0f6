#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wilf/semigroup.hpp"

namespace wilf {

/// Semigroup text: comma-separated positive integers with an optional "@r"
/// threshold suffix, e.g. "6,8,35" or "162,1114,1115@9879". Whitespace is
/// ignored. Malformed text raises ParseError; domain problems (gcd != 1 and
/// friends) raise the semigroup errors.
NumericalSemigroup parse_semigroup(std::string_view text);

/// Comma-separated integer list, used for semimodule generators too.
std::vector<Int> parse_int_list(std::string_view text);

/// {generators, multiplicity, frobenius, conductor, genus, delta,
/// embedding_dimension, type, symmetric}; type is omitted for ℕ.
nlohmann::ordered_json semigroup_record(const NumericalSemigroup& ns);

/// Header line plus one value line; generators joined by spaces, type empty
/// for ℕ.
std::string semigroup_record_csv(const NumericalSemigroup& ns);

}  // namespace wilf
