#ifndef SHF_CONSTRUCTOR_HPP
#define SHF_CONSTRUCTOR_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "shf/bigcomb.hpp"
#include "shf/model.hpp"

namespace shf {

/// q-1 pairwise-disjoint w1-subsets of the columns with strictly increasing
/// minima. Each one yields a single row of the optimal construction.
struct TauTuple {
  std::vector<std::vector<Column>> parts;

  friend bool operator==(const TauTuple &, const TauTuple &) = default;
};

/// Streams every tuple once, in lexicographic order of the concatenated
/// sorted parts. The callback returns false to stop. Throws DomainError when
/// (q-1)*w1 > n.
void tau_stream(std::size_t n, std::size_t q, std::size_t w1,
                const std::function<bool(const TauTuple &)> &visit);

std::vector<TauTuple> tau_tuples(std::size_t n, std::size_t q, std::size_t w1);

/// Row with symbol j on the columns of part j (1-based) and 0 elsewhere.
std::vector<Symbol> row_of_tuple(const TauTuple &tuple, std::size_t n);

/// Optimal representation matrix for type {w1^(q-1), w2}.
/// Requires q >= 2, 0 < w1 < w2 and w2 + (q-1)*w1 <= n.
RepMatrix construct(std::size_t n, std::size_t q, std::size_t w1,
                    std::size_t w2);

/// Same matrix written straight to `out` in the matrix text format without
/// materialising it. Returns the row count.
BigCount write_construction(std::ostream &out, std::size_t n, std::size_t q,
                            std::size_t w1, std::size_t w2);

} // namespace shf

#endif // SHF_CONSTRUCTOR_HPP
