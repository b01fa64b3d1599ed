#include "shf/constructor.hpp"

#include <algorithm>
#include <ostream>

#include "shf/errors.hpp"
#include "shf/verifier.hpp"

namespace shf {

namespace {

void check_tau_domain(std::size_t n, std::size_t q, std::size_t w1) {
  if (q < 2)
    throw DomainError("construction: q must be at least 2");
  if (w1 == 0)
    throw DomainError("construction: w1 must be positive");
  if ((q - 1) * w1 > n)
    throw DomainError("construction: (q-1)*w1 = " + std::to_string((q - 1) * w1) +
                      " exceeds n = " + std::to_string(n));
}

void check_construct_domain(std::size_t n, std::size_t q, std::size_t w1,
                            std::size_t w2) {
  check_tau_domain(n, q, w1);
  if (w1 >= w2)
    throw DomainError("construction: requires w1 < w2");
  if (w2 + (q - 1) * w1 > n)
    throw DomainError("construction: w2 + (q-1)*w1 = " +
                      std::to_string(w2 + (q - 1) * w1) + " exceeds n = " +
                      std::to_string(n));
}

// The tuples are exactly the canonical families of q-1 equal blocks, so the
// family walker enumerates them with the minima condition built in.
template <class Visit>
void walk_tau(std::size_t n, std::size_t q, std::size_t w1, Visit &&visit) {
  const std::vector<std::size_t> blocks(q - 1, w1);
  const detail::FamilyLayout layout(blocks);
  detail::walk_families(n, layout, std::span<const Column>{},
                        std::forward<Visit>(visit));
}

void fill_row(std::span<const Column> cols, std::size_t w1,
              std::vector<Symbol> &row) {
  std::fill(row.begin(), row.end(), 0);
  for (std::size_t i = 0; i < cols.size(); ++i)
    row[cols[i]] = static_cast<Symbol>(i / w1 + 1);
}

} // namespace

void tau_stream(std::size_t n, std::size_t q, std::size_t w1,
                const std::function<bool(const TauTuple &)> &visit) {
  check_tau_domain(n, q, w1);
  TauTuple t;
  walk_tau(n, q, w1, [&](std::span<const Column> cols) {
    t.parts.assign(q - 1, {});
    for (std::size_t i = 0; i < cols.size(); ++i)
      t.parts[i / w1].push_back(cols[i]);
    return visit(t);
  });
}

std::vector<TauTuple> tau_tuples(std::size_t n, std::size_t q, std::size_t w1) {
  std::vector<TauTuple> out;
  tau_stream(n, q, w1, [&](const TauTuple &t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<Symbol> row_of_tuple(const TauTuple &tuple, std::size_t n) {
  std::vector<Symbol> row(n, 0);
  for (std::size_t j = 0; j < tuple.parts.size(); ++j)
    for (Column c : tuple.parts[j]) {
      if (c >= n)
        throw DomainError("row_of_tuple: column out of range");
      row[c] = static_cast<Symbol>(j + 1);
    }
  return row;
}

RepMatrix construct(std::size_t n, std::size_t q, std::size_t w1,
                    std::size_t w2) {
  check_construct_domain(n, q, w1, w2);
  RepMatrix m(0, n, q);
  std::vector<Symbol> row(n);
  walk_tau(n, q, w1, [&](std::span<const Column> cols) {
    fill_row(cols, w1, row);
    m.append_row(row);
    return true;
  });
  return m;
}

BigCount write_construction(std::ostream &out, std::size_t n, std::size_t q,
                            std::size_t w1, std::size_t w2) {
  check_construct_domain(n, q, w1, w2);
  const BigCount rows = construction_size(n, q, w1);
  const ShfType type = ShfType::repeated(w1, q - 1, w2);
  out << "# type " << type.to_string() << '\n'
      << rows << ' ' << n << ' ' << q << '\n';
  std::vector<Symbol> row(n);
  walk_tau(n, q, w1, [&](std::span<const Column> cols) {
    fill_row(cols, w1, row);
    write_matrix_row(out, row);
    return static_cast<bool>(out);
  });
  return rows;
}

} // namespace shf
