#include "shf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "shf/errors.hpp"

namespace shf {

namespace detail {

FamilyLayout::FamilyLayout(const ShfType &type)
    : FamilyLayout(type.blocks()) {}

FamilyLayout::FamilyLayout(std::span<const std::size_t> blocks) {
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    start.push_back(u);
    tied_to_previous.push_back(p > 0 && blocks[p] == blocks[p - 1]);
    for (std::size_t j = 0; j < blocks[p]; ++j, ++u)
      part_of.push_back(p);
  }
}

ColumnFamily family_from_flat(const FamilyLayout &layout,
                              std::span<const Column> cols) {
  std::vector<std::vector<Column>> parts(layout.start.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    parts[layout.part_of[i]].push_back(cols[i]);
  return ColumnFamily(std::move(parts));
}

} // namespace detail

namespace {

using detail::FamilyLayout;
using detail::walk_families;

unsigned resolve_threads(const VerifyOptions &options) {
  if (options.threads > 0)
    return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Per-row symbol classes as bitmasks so that a separation test costs one
// load per column. Each row's symbols are renumbered densely, which fits
// in 64 bits whenever n <= 64 or q <= 64; otherwise a sort-based fallback
// is used.
class SeparationIndex {
public:
  explicit SeparationIndex(const RepMatrix &m)
      : m_(m), n_(m.cols()), use_masks_(m.cols() <= 64 || m.q() <= 64) {
    if (!use_masks_)
      return;
    masks_.resize(m.rows() * n_);
    std::unordered_map<Symbol, unsigned> rank;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rank.clear();
      for (std::size_t c = 0; c < n_; ++c) {
        const Symbol s = m(r, c);
        unsigned bit = m.q() <= 64 ? s : 0;
        if (m.q() > 64) {
          auto [it, inserted] =
              rank.try_emplace(s, static_cast<unsigned>(rank.size()));
          bit = it->second;
        }
        masks_[r * n_ + c] = std::uint64_t{1} << bit;
      }
    }
  }

  bool separates(std::size_t r, const FamilyLayout &layout,
                 std::span<const Column> cols) const {
    if (!use_masks_)
      return separates_slow(r, layout, cols);
    const std::uint64_t *row = masks_.data() + r * n_;
    std::uint64_t seen = 0;
    std::uint64_t part = 0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (layout.part_of[i] != p) {
        if (part & seen)
          return false;
        seen |= part;
        part = 0;
        p = layout.part_of[i];
      }
      part |= row[cols[i]];
    }
    return (part & seen) == 0;
  }

private:
  bool separates_slow(std::size_t r, const FamilyLayout &layout,
                      std::span<const Column> cols) const {
    std::vector<std::pair<Symbol, std::size_t>> tagged;
    tagged.reserve(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
      tagged.emplace_back(m_(r, cols[i]), layout.part_of[i]);
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i)
      if (tagged[i].first == tagged[i - 1].first &&
          tagged[i].second != tagged[i - 1].second)
        return false;
    return true;
  }

  const RepMatrix &m_;
  std::size_t n_;
  bool use_masks_;
  std::vector<std::uint64_t> masks_;
};

// Splits the canonical enumeration into ordered work items by fixing the
// first `depth` positions.
std::vector<std::vector<Column>> plan_prefixes(std::size_t n,
                                               const FamilyLayout &layout,
                                               unsigned threads) {
  if (threads <= 1)
    return {{}};
  const std::size_t target = 32 * static_cast<std::size_t>(threads);
  std::vector<std::vector<Column>> prefixes;
  for (std::size_t depth = 1; depth <= layout.u; ++depth) {
    prefixes.clear();
    auto collect = [&](std::span<const Column> p) {
      prefixes.emplace_back(p.begin(), p.end());
      return true;
    };
    detail::FamilyWalker<decltype(collect)> w(n, layout, collect);
    w.run({}, depth);
    if (prefixes.size() >= target)
      break;
  }
  return prefixes;
}

template <class Work>
void run_workers(unsigned threads, std::size_t items, Work &&work) {
  std::atomic<std::size_t> next{0};
  auto loop = [&](unsigned worker) {
    for (std::size_t i = next++; i < items; i = next++)
      work(worker, i);
  };
  if (threads <= 1 || items <= 1) {
    loop(0);
    return;
  }
  std::vector<std::jthread> pool;
  const unsigned count =
      static_cast<unsigned>(std::min<std::size_t>(threads, items));
  for (unsigned t = 0; t < count; ++t)
    pool.emplace_back(loop, t);
}

void check_preconditions(const RepMatrix &m, const ShfType &type) {
  ShfParams{m.rows(), m.cols(), m.q(), type}.validate();
}

} // namespace

bool row_separates(std::span<const Symbol> row, const ColumnFamily &family) {
  std::unordered_map<Symbol, std::size_t> owner;
  for (std::size_t p = 0; p < family.parts().size(); ++p) {
    for (Column c : family.parts()[p]) {
      if (c >= row.size())
        throw DomainError("row_separates: column index out of range");
      auto [it, inserted] = owner.try_emplace(row[c], p);
      if (it->second != p)
        return false;
    }
  }
  return true;
}

BigCount family_count(std::size_t n, const ShfType &type) {
  if (type.u() > n)
    return 0;
  BigCount r = factorial(n) / factorial(n - type.u());
  for (std::size_t w : type.blocks())
    r /= factorial(w);
  return r / type.orderings();
}

void enumerate_families(std::size_t n, const ShfType &type,
                        const std::function<bool(const ColumnFamily &)> &visit) {
  if (type.u() > n)
    throw DomainError("enumerate_families: u = " + std::to_string(type.u()) +
                      " exceeds n = " + std::to_string(n));
  const FamilyLayout layout(type);
  walk_families(n, layout, std::span<const Column>{},
                [&](std::span<const Column> cols) {
                  return visit(detail::family_from_flat(layout, cols));
                });
}

std::vector<ColumnFamily> list_families(std::size_t n, const ShfType &type) {
  std::vector<ColumnFamily> out;
  enumerate_families(n, type, [&](const ColumnFamily &f) {
    out.push_back(f);
    return true;
  });
  return out;
}

Verdict verify(const RepMatrix &matrix, const ShfType &type,
               const VerifyOptions &options) {
  check_preconditions(matrix, type);
  const FamilyLayout layout(type);
  const std::size_t n = matrix.cols();
  const unsigned threads = resolve_threads(options);
  const SeparationIndex index(matrix);
  const auto prefixes = plan_prefixes(n, layout, threads);
  const std::size_t items = prefixes.size();

  struct Failure {
    std::uint64_t position = 0; // 1-based within the item
    std::vector<Column> cols;
  };
  std::vector<std::uint64_t> counts(items, 0);
  std::vector<std::optional<Failure>> failures(items);
  std::atomic<std::size_t> first_failure{items};

  run_workers(threads, items, [&](unsigned, std::size_t item) {
    if (item > first_failure.load())
      return;
    std::uint64_t seen = 0;
    walk_families(n, layout, prefixes[item], [&](std::span<const Column> cols) {
      ++seen;
      for (std::size_t r = 0; r < matrix.rows(); ++r)
        if (index.separates(r, layout, cols))
          return (seen & 0xfff) != 0 || item < first_failure.load();
      failures[item] = Failure{seen, {cols.begin(), cols.end()}};
      std::size_t cur = first_failure.load();
      while (item < cur && !first_failure.compare_exchange_weak(cur, item)) {
      }
      return false;
    });
    counts[item] = seen;
  });

  Verdict v;
  const std::size_t fail = first_failure.load();
  BigCount checked = 0;
  for (std::size_t i = 0; i < std::min(fail, items); ++i)
    checked += counts[i];
  if (fail == items) {
    v.ok = true;
    v.families_checked = checked;
    return v;
  }
  v.ok = false;
  v.families_checked = checked + failures[fail]->position;
  v.witness = detail::family_from_flat(layout, failures[fail]->cols);
  return v;
}

BigCount count_separated_by_row_bruteforce(std::span<const Symbol> row,
                                           const ShfType &type, bool ordered) {
  const std::size_t n = row.size();
  if (type.u() > n)
    throw DomainError("count_separated_by_row_bruteforce: u exceeds n");
  Symbol q = 0;
  for (Symbol s : row)
    q = std::max(q, s + 1);
  RepMatrix single(std::max<Symbol>(q, 1), {std::vector<Symbol>(row.begin(), row.end())});
  const SeparationIndex index(single);
  const FamilyLayout layout(type);
  std::uint64_t hits = 0;
  walk_families(n, layout, std::span<const Column>{},
                [&](std::span<const Column> cols) {
                  hits += index.separates(0, layout, cols) ? 1 : 0;
                  return true;
                });
  BigCount r = hits;
  if (ordered)
    r *= type.orderings();
  return r;
}

BigCount count_separated_by_row_formula(const RowWeight &weight, std::size_t w1,
                                        std::size_t w2, std::size_t n,
                                        std::size_t q) {
  if (q < 2 || weight.counts.size() != q)
    throw DomainError("count_separated_by_row_formula: weight must have q "
                      "entries");
  if (weight.n() != n)
    throw DomainError("count_separated_by_row_formula: weight does not sum "
                      "to n");
  if (w1 == 0 || w1 >= w2)
    throw DomainError("count_separated_by_row_formula: requires 0 < w1 < w2");
  if (weight.counts[0] < w2)
    throw DomainError("count_separated_by_row_formula: i_0 < w2");
  for (std::size_t k = 1; k < q; ++k)
    if (weight.counts[k] < w1 || weight.counts[k] >= w2)
      throw DomainError("count_separated_by_row_formula: need w1 <= i_" +
                        std::to_string(k) + " < w2");
  std::vector<std::size_t> classes(weight.counts.begin() + 1,
                                   weight.counts.end());
  return factorial(q - 1) * t_function(q, w1, w2, n, classes);
}

std::vector<std::size_t> find_redundant_rows(const RepMatrix &matrix,
                                             const ShfType &type,
                                             const VerifyOptions &options) {
  check_preconditions(matrix, type);
  const FamilyLayout layout(type);
  const std::size_t n = matrix.cols();
  const std::size_t rows = matrix.rows();
  const unsigned threads = resolve_threads(options);
  const SeparationIndex index(matrix);
  const auto prefixes = plan_prefixes(n, layout, threads);

  std::vector<std::vector<char>> necessary(std::max(1u, threads),
                                           std::vector<char>(rows, 0));
  std::atomic<bool> unseparated{false};

  run_workers(threads, prefixes.size(), [&](unsigned worker, std::size_t item) {
    auto &mine = necessary[worker];
    walk_families(n, layout, prefixes[item], [&](std::span<const Column> cols) {
      std::size_t first = rows;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!index.separates(r, layout, cols))
          continue;
        if (first != rows)
          return true; // two separating rows: neither is forced
        first = r;
      }
      if (first == rows) {
        unseparated = true;
        return false;
      }
      mine[first] = 1;
      return !unseparated.load(std::memory_order_relaxed);
    });
  });

  if (unseparated)
    throw DomainError("find_redundant_rows: matrix is not an SHF of type {" +
                      type.to_string() + "}");
  std::vector<std::size_t> redundant;
  for (std::size_t r = 0; r < rows; ++r) {
    bool needed = false;
    for (const auto &v : necessary)
      needed = needed || v[r];
    if (!needed)
      redundant.push_back(r);
  }
  return redundant;
}

} // namespace shf
