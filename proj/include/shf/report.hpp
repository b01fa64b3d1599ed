#ifndef SHF_REPORT_HPP
#define SHF_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shf/bounds.hpp"
#include "shf/verifier.hpp"

namespace shf {

/// {"ok", "witness": [[cols...], ...] | null, "families_checked": "<decimal>"}
nlohmann::json verdict_to_json(const Verdict &v);

/// {"value": "<decimal>" | null, "omega", "rendering"}
nlohmann::json bound_to_json(const BoundResult &b);

struct TableKey {
  std::size_t q = 0;
  std::size_t w1 = 0;
  std::size_t w2 = 0;
};

/// One row of the bound comparison table for type {w1^(q-1), w2}:
/// the largest N that still forces n <= n_hi - 1, and what the three general
/// bounds allow at that N (floor-plus-one exponents, designated-pair gamma,
/// tabulated 2013 variant).
struct TableRow {
  TableKey key;
  BigCount n_max;
  std::optional<std::size_t> implied_n;
  BoundResult besz;
  BoundResult bt2011;
  BoundResult bt2013;
};

/// q in {3,4,5}, w1 in {1,2,3}, w1 < w2 <= 6: 36 rows.
std::vector<TableKey> default_grid();

TableRow make_table_row(const TableKey &key);

/// Same comparison columns evaluated at a caller-supplied N.
TableRow make_table_row(const TableKey &key, const BigCount &N);

std::vector<TableRow> build_table(const std::vector<TableKey> &grid);

/// Exact decimal below 10^7, scientific rendering above, "Ω" past the double
/// range.
std::string format_cell(const BoundResult &b);

void write_table_markdown(std::ostream &out, const std::vector<TableRow> &rows);
void write_table_csv(std::ostream &out, const std::vector<TableRow> &rows);

} // namespace shf

#endif // SHF_REPORT_HPP
