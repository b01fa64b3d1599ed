#include "shf/report.hpp"

#include <ostream>

namespace shf {

namespace {

std::string implied_cell(const std::optional<std::size_t> &n) {
  return n ? std::to_string(*n) : "-";
}

} // namespace

nlohmann::json verdict_to_json(const Verdict &v) {
  nlohmann::json j;
  j["ok"] = v.ok;
  if (v.witness) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto &p : v.witness->parts())
      parts.push_back(p);
    j["witness"] = parts;
  } else {
    j["witness"] = nullptr;
  }
  j["families_checked"] = v.families_checked.str();
  return j;
}

nlohmann::json bound_to_json(const BoundResult &b) {
  nlohmann::json j;
  j["value"] = b.value ? nlohmann::json(b.value->str()) : nlohmann::json();
  j["omega"] = b.omega;
  j["rendering"] = b.rendering;
  return j;
}

std::vector<TableKey> default_grid() {
  std::vector<TableKey> grid;
  for (std::size_t q = 3; q <= 5; ++q)
    for (std::size_t w1 = 1; w1 <= 3; ++w1)
      for (std::size_t w2 = w1 + 1; w2 <= 6; ++w2)
        grid.push_back({q, w1, w2});
  return grid;
}

TableRow make_table_row(const TableKey &key, const BigCount &N) {
  const ShfType type = ShfType::repeated(key.w1, key.q - 1, key.w2);
  TableRow row;
  row.key = key;
  row.n_max = N;
  row.implied_n = implied_max_n(N, key.q, key.w1, key.w2);
  row.besz = besz_bound(N, key.q, type, GammaMode::DesignatedPair,
                        ExpMode::FloorPlusOne, GammaPair{key.w1, key.w2});
  row.bt2011 = baztran2011_bound(N, key.q, type, ExpMode::FloorPlusOne);
  row.bt2013 = baztran2013_bound(N, key.q, type, ExpMode::FloorPlusOne,
                                 Bt2013Variant::Tabulated);
  return row;
}

TableRow make_table_row(const TableKey &key) {
  const NRange range = valid_n_range(key.q, key.w1, key.w2);
  return make_table_row(key, main_min_N(range.hi, key.q, key.w1, key.w2) - 1);
}

std::vector<TableRow> build_table(const std::vector<TableKey> &grid) {
  std::vector<TableRow> rows;
  rows.reserve(grid.size());
  for (const auto &k : grid)
    rows.push_back(make_table_row(k));
  return rows;
}

std::string format_cell(const BoundResult &b) {
  if (b.omega)
    return "Ω";
  static const BigCount exact_limit = 10'000'000;
  if (b.value && *b.value < exact_limit)
    return b.value->str();
  return b.rendering;
}

void write_table_markdown(std::ostream &out, const std::vector<TableRow> &rows) {
  out << "| q | w1 | w2 | N <= | n <= (main) | n <= (BESZ) | n <= (BT2011) "
         "| n <= (BT2013) |\n"
      << "|---|---|---|---|---|---|---|---|\n";
  for (const auto &r : rows)
    out << "| " << r.key.q << " | " << r.key.w1 << " | " << r.key.w2 << " | "
        << r.n_max << " | " << implied_cell(r.implied_n) << " | " << format_cell(r.besz)
        << " | " << format_cell(r.bt2011) << " | " << format_cell(r.bt2013)
        << " |\n";
}

void write_table_csv(std::ostream &out, const std::vector<TableRow> &rows) {
  out << "q,w1,w2,N_max,implied_n_main,besz,bt2011,bt2013\n";
  for (const auto &r : rows)
    out << r.key.q << ',' << r.key.w1 << ',' << r.key.w2 << ',' << r.n_max
        << ',' << implied_cell(r.implied_n) << ',' << format_cell(r.besz) << ','
        << format_cell(r.bt2011) << ',' << format_cell(r.bt2013) << '\n';
}

} // namespace shf
