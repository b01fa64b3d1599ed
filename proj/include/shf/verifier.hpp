#ifndef SHF_VERIFIER_HPP
#define SHF_VERIFIER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <span>
#include <vector>

#include "shf/bigcomb.hpp"
#include "shf/model.hpp"

namespace shf {

/// Result of an exhaustive separation check. When !ok, `witness` is the
/// first family (in canonical enumeration order) that no row separates and
/// `families_checked` counts families up to and including it.
struct Verdict {
  bool ok = true;
  std::optional<ColumnFamily> witness;
  BigCount families_checked = 0;
};

struct VerifyOptions {
  unsigned threads = 0; // 0: hardware concurrency; 1: sequential reference
};

/// True iff the symbol sets of the row on the family's parts are pairwise
/// disjoint.
bool row_separates(std::span<const Symbol> row, const ColumnFamily &family);

/// Closed-form number of canonical families of `type` on n columns:
/// n! / ((n-u)! * prod w_i! * prod m_s!).
BigCount family_count(std::size_t n, const ShfType &type);

/// Streams every canonical family exactly once in lexicographic order of the
/// flat encoding. The callback returns false to stop early.
void enumerate_families(std::size_t n, const ShfType &type,
                        const std::function<bool(const ColumnFamily &)> &visit);

std::vector<ColumnFamily> list_families(std::size_t n, const ShfType &type);

Verdict verify(const RepMatrix &matrix, const ShfType &type,
               const VerifyOptions &options = {});

/// Families separated by `row`; with `ordered`, each unordered family counts
/// once per ordering of its equal-size parts.
BigCount count_separated_by_row_bruteforce(std::span<const Symbol> row,
                                           const ShfType &type, bool ordered);

/// (q-1)! * T(i_1, ..., i_{q-1}) for a row of the given weight, valid when
/// i_0 >= w2 and w1 <= i_k < w2 for k >= 1.
BigCount count_separated_by_row_formula(const RowWeight &weight, std::size_t w1,
                                        std::size_t w2, std::size_t n,
                                        std::size_t q);

/// Rows whose deletion keeps the matrix an SHF of `type`, ascending.
/// Throws DomainError if the matrix is not an SHF of that type.
std::vector<std::size_t> find_redundant_rows(const RepMatrix &matrix,
                                             const ShfType &type,
                                             const VerifyOptions &options = {});

namespace detail {

/// Position layout of a flat family encoding: part p covers
/// [start[p], start[p] + size[p]).
struct FamilyLayout {
  explicit FamilyLayout(const ShfType &type);
  explicit FamilyLayout(std::span<const std::size_t> blocks);

  std::size_t u = 0;
  std::vector<std::size_t> part_of;   // per position
  std::vector<std::size_t> start;     // per part
  std::vector<bool> tied_to_previous; // equal size to the previous part
};

/// Depth-first walk over canonical families in lexicographic order. The
/// first prefix.size() positions are fixed; `limit` < u stops the walk at
/// that depth and reports prefixes instead of full families.
template <class Visit> class FamilyWalker {
public:
  FamilyWalker(std::size_t n, const FamilyLayout &layout, Visit &visit)
      : n_(n), layout_(layout), visit_(visit), cols_(layout.u),
        used_(n, false) {}

  /// Returns false if the visitor stopped the walk.
  bool run(std::span<const Column> prefix, std::size_t limit) {
    limit_ = limit;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      cols_[i] = prefix[i];
      used_[prefix[i]] = true;
    }
    const bool r = step(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i)
      used_[prefix[i]] = false;
    return r;
  }

private:
  bool step(std::size_t pos) {
    if (pos == limit_)
      return visit_(std::span<const Column>(cols_.data(), pos));
    const std::size_t part = layout_.part_of[pos];
    const std::size_t start = layout_.start[part];
    const std::size_t end = part + 1 < layout_.start.size()
                                ? layout_.start[part + 1]
                                : layout_.u;
    std::size_t from = 0;
    if (pos > start)
      from = cols_[pos - 1] + 1;
    else if (layout_.tied_to_previous[part])
      from = cols_[layout_.start[part - 1]] + 1;
    // Leave room for the rest of this part.
    const std::size_t need = end - pos;
    for (std::size_t c = from; c + need <= n_; ++c) {
      if (used_[c])
        continue;
      used_[c] = true;
      cols_[pos] = c;
      const bool go_on = step(pos + 1);
      used_[c] = false;
      if (!go_on)
        return false;
    }
    return true;
  }

  std::size_t n_;
  const FamilyLayout &layout_;
  Visit &visit_;
  std::vector<Column> cols_;
  std::vector<bool> used_;
  std::size_t limit_ = 0;
};

template <class Visit>
bool walk_families(std::size_t n, const FamilyLayout &layout,
                   std::span<const Column> prefix, Visit &&visit) {
  FamilyWalker<std::remove_reference_t<Visit>> w(n, layout, visit);
  return w.run(prefix, layout.u);
}

ColumnFamily family_from_flat(const FamilyLayout &layout,
                              std::span<const Column> cols);

} // namespace detail

} // namespace shf

#endif // SHF_VERIFIER_HPP
