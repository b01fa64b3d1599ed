#ifndef SHF_BIGCOMB_HPP
#define SHF_BIGCOMB_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shf {

/// Exact nonnegative count. Every count, bound and family size in the
/// library is carried in this type; no operation rounds or overflows.
using BigCount = boost::multiprecision::cpp_int;

/// Pascal triangle of exact binomials for n < cap, immutable after
/// construction. Queries past the cap fall back to the multiplicative
/// formula, so the table is purely a cache.
class BinomialTable {
public:
  static constexpr std::size_t kDefaultCap = 256;

  explicit BinomialTable(std::size_t cap = kDefaultCap);

  std::size_t cap() const noexcept { return cap_; }

  BigCount operator()(std::size_t n, std::size_t k) const;

private:
  std::size_t cap_;
  std::vector<std::vector<BigCount>> rows_; // rows_[n][k], k <= n / 2
};

/// C(n, k); zero when k > n.
BigCount binom(std::size_t n, std::size_t k);

BigCount factorial(std::size_t n);

/// Product of C(i_k, w1) over the q-1 nonzero symbol classes times
/// C(n - sum i_k, w2) for the zero class. Requires w1 < w2, i_k >= w1 and
/// n - sum i_k >= w2; throws DomainError otherwise.
BigCount t_function(std::size_t q, std::size_t w1, std::size_t w2,
                    std::size_t n, std::span<const std::size_t> weights);

/// Number of rows of the optimal construction:
/// (1/(q-1)!) * prod_{j=0}^{q-2} C(n - j*w1, w1).
/// Throws DomainError when (q-1)*w1 > n or q < 2.
BigCount construction_size(std::size_t n, std::size_t q, std::size_t w1);

} // namespace shf

#endif // SHF_BIGCOMB_HPP
