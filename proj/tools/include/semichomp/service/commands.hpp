#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semichomp/serialize.hpp"

namespace semichomp::service {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitUnknown = 3,
};

int exit_code_for(const Error& e);

// Every command renders to all three forms; the CLI picks one. json and csv
// never carry timings, so repeated runs are byte-identical.
struct Report {
  Json json;
  std::string text;
  std::string csv;
  int exit_code = kExitOk;
};

struct SearchOptions {
  std::optional<Int> max;            // search horizon
  std::optional<std::uint64_t> budget;  // decider state evaluations
};

Report info_command(std::string_view gens);
Report apery_command(std::string_view gens, Int x);
Report classify_command(std::string_view gens);
Report decide_command(std::string_view gens, const SearchOptions& opts);
Report search_command(std::string_view gens, const SearchOptions& opts);

// Table of winners on <a, a+1, ..., a+k>.
struct TableCell {
  Int a = 0, k = 0;
  Winner winner = Winner::kUnknown;
  std::string verdict;   // "B", "A_36", "B<=49", "?<=40"
  std::string source;    // "theorem" or "search"
  std::string rule;      // deciding rule for theorem cells
  std::optional<Int> move;
  std::optional<Int> bound;  // search horizon for search cells
  std::optional<bool> agrees;  // theorem cell re-checked by search (check mode)
  double millis = 0;
};

struct TableOptions {
  Int a_min = 2, a_max = 10;
  Int k_min = 1;
  std::optional<Int> k_max;     // default a - 1
  std::optional<Int> bound;     // overrides the per-cell default
  std::optional<std::uint64_t> budget;
  bool check = false;           // re-check theorem cells by search
};

// Search horizon used for (a, k) when no theorem applies: the bound printed
// in the published table where there is one, else 40.
Int default_cell_bound(Int a, Int k);
std::optional<Int> published_cell_bound(Int a, Int k);

TableCell evaluate_cell(Int a, Int k, const TableOptions& opts);
std::vector<TableCell> build_table(const TableOptions& opts);
Report table_command(const TableOptions& opts);

// Winner of <a, ..., 2a-c> for each a, by rules, then the decider, then a
// bounded search; flags A-wins where a or c is even.
struct ConjectureOptions {
  Int c = 1;
  Int a_min = 3, a_max = 10;
  SearchOptions search;
};
Report conjecture_command(const ConjectureOptions& opts);

// Torsion commands. `group` is a spec accepted by parse_group; monoid
// commands additionally accept "capped:N".
Report torsion_info_command(std::string_view group, std::string_view gens);
Report torsion_apery_command(std::string_view group, std::string_view gens, std::string_view x);
Report torsion_symmetric_command(std::string_view group, std::string_view gens);
Report torsion_search_command(std::string_view group, std::string_view gens, const SearchOptions& opts);
Report torsion_nicely_command(std::string_view monoid, std::string_view gens, std::optional<std::string> apery_of,
                              Int bound);
Report torsion_noncommutative_command(std::string_view group, std::string_view s_name, std::string_view t_name);

FiniteMonoid parse_monoid(std::string_view spec);

}  // namespace semichomp::service
