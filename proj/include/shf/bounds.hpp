#ifndef SHF_BOUNDS_HPP
#define SHF_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "shf/bigcomb.hpp"
#include "shf/model.hpp"

namespace shf {

/// An upper bound on n, exact where it can be materialised.
///
/// `omega` is set iff the value exceeds the largest finite IEEE double,
/// (2 - 2^-52) * 2^1023 = 2^1024 - 2^971. Values above kMaxExactBits bits
/// are classified from a bit-length lower bound and `value` is left empty.
struct BoundResult {
  static constexpr std::size_t kMaxExactBits = 65536;

  std::optional<BigCount> value;
  bool omega = false;
  std::string rendering; // "a.bc×10^e", or "Ω" when omega
};

/// Exponent convention for q^k with k derived from N and u.
enum class ExpMode {
  Ceil,        // k = ceil(N / (u-1))
  FloorPlusOne // k = floor(N / (u-1)) + 1
};

/// Which two blocks enter gamma = w1*w2 + u - w1 - w2.
enum class GammaMode { TwoSmallest, DesignatedPair };

enum class Bt2013Variant { Printed, Tabulated };

struct NRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool contains(std::size_t n) const noexcept { return lo <= n && n <= hi; }
};

/// Column counts for which the {w1^(q-1), w2} lower bound holds:
/// w2 + (q-1)w1 <= n <= w2 + (q-1)w1 + w2/w1 - 1, upper end floored.
NRange valid_n_range(std::size_t q, std::size_t w1, std::size_t w2);

/// Minimum number of rows of an SHF(N; n, q, {w1^(q-1), w2}) for n in
/// valid_n_range. Throws RangeError outside it.
BigCount main_min_N(std::size_t n, std::size_t q, std::size_t w1,
                    std::size_t w2);

/// Largest n compatible with N rows: n* - 1 for the smallest n* in range
/// with main_min_N(n*) > N. nullopt when N covers the whole range.
std::optional<std::size_t> implied_max_n(const BigCount &N, std::size_t q,
                                         std::size_t w1, std::size_t w2);

/// Strong-SHF bound C(n, q-1) for type {1^t1, t2}; requires t1 >= q-1 and
/// t1 + t2 <= n <= 2(t1 + t2) - q.
BigCount sshf_min_N(std::size_t n, std::size_t q, std::size_t t1,
                    std::size_t t2);

std::optional<std::size_t> sshf_implied_max_n(const BigCount &N, std::size_t q,
                                              std::size_t t1, std::size_t t2);

NRange sshf_n_range(std::size_t q, std::size_t t1, std::size_t t2);

/// Pair of block sizes used for gamma in DesignatedPair mode.
struct GammaPair {
  std::size_t w1 = 0;
  std::size_t w2 = 0;
};

/// gamma * q^k with gamma = w1*w2 + u - w1 - w2. In TwoSmallest mode the
/// pair is the two smallest blocks; in DesignatedPair mode `pair` must name
/// two blocks of the type (defaulting to smallest and largest).
BoundResult besz_bound(const BigCount &N, std::size_t q, const ShfType &type,
                       GammaMode gamma_mode, ExpMode exp_mode,
                       std::optional<GammaPair> pair = std::nullopt);

/// (u-1) * q^k.
BoundResult baztran2011_bound(const BigCount &N, std::size_t q,
                              const ShfType &type, ExpMode exp_mode);

/// Printed: identical to baztran2011_bound. Tabulated:
/// floor((u-1) q^k + 2 - 2 sqrt(3 q^k + 1)), evaluated exactly.
/// Requires t >= 3 and u >= 4 (HypothesisError otherwise).
BoundResult baztran2013_bound(const BigCount &N, std::size_t q,
                              const ShfType &type, ExpMode exp_mode,
                              Bt2013Variant variant);

bool omega_check(const BigCount &value);

/// Three significant digits, truncated: 20971520 -> "2.09×10^7".
std::string render_scientific(const BigCount &value);

std::string to_string(ExpMode m);
std::string to_string(GammaMode m);
std::string to_string(Bt2013Variant v);

} // namespace shf

#endif // SHF_BOUNDS_HPP
