#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wilf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistency = 3;

/// Runs one wilf_lab command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The five threshold semigroups of the reference table, as spec strings.
const std::vector<std::string>& table1_specs();
/// Rendered tables; these are what `tables --which N` prints.
std::string render_table1();
std::string render_table2();

}  // namespace wilf::cli
