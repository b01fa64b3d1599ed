#include "shf/bigcomb.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shf/errors.hpp"

namespace shf {

namespace {

BigCount binom_direct(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

const BinomialTable &default_table() {
  static const BinomialTable table;
  return table;
}

} // namespace

BinomialTable::BinomialTable(std::size_t cap) : cap_(cap) {
  rows_.reserve(cap);
  for (std::size_t n = 0; n < cap; ++n) {
    std::vector<BigCount> row(n / 2 + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n / 2; ++k) {
      const auto &prev = rows_[n - 1];
      // C(n-1, k) lives at index min(k, n-1-k).
      const std::size_t kk = std::min(k, n - 1 - k);
      row[k] = prev[k - 1] + prev[kk];
    }
    rows_.push_back(std::move(row));
  }
}

BigCount BinomialTable::operator()(std::size_t n, std::size_t k) const {
  if (k > n)
    return 0;
  if (n >= cap_)
    return binom_direct(n, k);
  return rows_[n][std::min(k, n - k)];
}

BigCount binom(std::size_t n, std::size_t k) { return default_table()(n, k); }

BigCount factorial(std::size_t n) {
  BigCount r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

BigCount t_function(std::size_t q, std::size_t w1, std::size_t w2,
                    std::size_t n, std::span<const std::size_t> weights) {
  if (q < 2)
    throw DomainError("t_function: q must be at least 2");
  if (w1 == 0 || w1 >= w2)
    throw DomainError("t_function: requires 0 < w1 < w2");
  if (weights.size() != q - 1)
    throw DomainError("t_function: expected " + std::to_string(q - 1) +
                      " class sizes, got " + std::to_string(weights.size()));
  std::size_t total = 0;
  BigCount r = 1;
  for (std::size_t i : weights) {
    if (i < w1)
      throw DomainError("t_function: class size " + std::to_string(i) +
                        " below w1 = " + std::to_string(w1));
    total += i;
    r *= binom(i, w1);
  }
  if (total > n || n - total < w2)
    throw DomainError("t_function: zero class smaller than w2");
  return r * binom(n - total, w2);
}

BigCount construction_size(std::size_t n, std::size_t q, std::size_t w1) {
  if (q < 2)
    throw DomainError("construction_size: q must be at least 2");
  if (w1 == 0)
    throw DomainError("construction_size: w1 must be positive");
  if ((q - 1) * w1 > n)
    throw DomainError("construction_size: (q-1)*w1 exceeds n");
  BigCount ordered = 1;
  for (std::size_t j = 0; j + 1 < q; ++j)
    ordered *= binom(n - j * w1, w1);
  const BigCount sym = factorial(q - 1);
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(ordered, sym, quotient, remainder);
  // Orbits of ordered tuples under S_{q-1}: the division is always exact.
  if (remainder != 0)
    throw std::logic_error("construction_size: non-integral orbit count");
  return quotient;
}

} // namespace shf
