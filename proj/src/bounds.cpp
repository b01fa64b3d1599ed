#include "shf/bounds.hpp"

#include <algorithm>
#include <bit>

#include "shf/errors.hpp"

namespace shf {

namespace {

const BigCount &double_max() {
  static const BigCount v = (BigCount(1) << 1024) - (BigCount(1) << 971);
  return v;
}

void check_q(std::size_t q) {
  if (q < 2)
    throw DomainError("q must be at least 2");
}

BigCount exponent(const BigCount &N, std::size_t u, ExpMode mode) {
  const BigCount d = u - 1;
  if (mode == ExpMode::Ceil)
    return (N + d - 1) / d;
  return N / d + 1;
}

// coeff * q^k, or an omega result without a value when q^k alone is far
// beyond the double range. The callers' values are all >= q^k.
template <class Finish>
BoundResult power_bound(std::size_t q, const BigCount &k, Finish &&finish) {
  BoundResult r;
  const std::size_t bits_per_digit = std::bit_width(q - 1); // ceil(log2 q)
  if (k > BoundResult::kMaxExactBits / bits_per_digit) {
    // k * floor(log2 q) > kMaxExactBits / 2, far above 1024 bits.
    r.omega = true;
    r.rendering = "Ω";
    return r;
  }
  const BigCount qk = boost::multiprecision::pow(
      BigCount(q), static_cast<unsigned>(k.convert_to<unsigned long>()));
  r.value = finish(qk);
  r.omega = omega_check(*r.value);
  r.rendering = r.omega ? "Ω" : render_scientific(*r.value);
  return r;
}

std::size_t checked_u(const ShfType &type) {
  if (type.t() < 2)
    throw DomainError("type needs at least two blocks");
  return type.u();
}

} // namespace

NRange valid_n_range(std::size_t q, std::size_t w1, std::size_t w2) {
  check_q(q);
  if (w1 == 0 || w1 >= w2)
    throw DomainError("valid_n_range: requires 0 < w1 < w2");
  NRange r;
  r.lo = w2 + (q - 1) * w1;
  // n <= lo + w2/w1 - 1  <=>  n*w1 <= (lo-1)*w1 + w2.
  r.hi = r.lo - 1 + w2 / w1;
  return r;
}

BigCount main_min_N(std::size_t n, std::size_t q, std::size_t w1,
                    std::size_t w2) {
  const NRange range = valid_n_range(q, w1, w2);
  if (!range.contains(n))
    throw RangeError("main bound holds only for " + std::to_string(range.lo) +
                     " <= n <= " + std::to_string(range.hi) + ", got n = " +
                     std::to_string(n));
  return construction_size(n, q, w1);
}

std::optional<std::size_t> implied_max_n(const BigCount &N, std::size_t q,
                                         std::size_t w1, std::size_t w2) {
  const NRange range = valid_n_range(q, w1, w2);
  for (std::size_t n = range.lo; n <= range.hi; ++n)
    if (construction_size(n, q, w1) > N)
      return n - 1;
  return std::nullopt;
}

NRange sshf_n_range(std::size_t q, std::size_t t1, std::size_t t2) {
  check_q(q);
  if (t1 < q - 1)
    throw RangeError("sshf bound requires t1 >= q - 1");
  if (t2 == 0)
    throw DomainError("sshf bound requires t2 >= 1");
  const std::size_t s = t1 + t2;
  return {s, 2 * s >= q ? 2 * s - q : 0};
}

BigCount sshf_min_N(std::size_t n, std::size_t q, std::size_t t1,
                    std::size_t t2) {
  const NRange range = sshf_n_range(q, t1, t2);
  if (!range.contains(n))
    throw RangeError("sshf bound holds only for t1 + t2 <= n <= 2(t1 + t2) - "
                     "q, i.e. " +
                     std::to_string(range.lo) + " <= n <= " +
                     std::to_string(range.hi));
  return binom(n, q - 1);
}

std::optional<std::size_t> sshf_implied_max_n(const BigCount &N, std::size_t q,
                                              std::size_t t1, std::size_t t2) {
  const NRange range = sshf_n_range(q, t1, t2);
  for (std::size_t n = range.lo; n <= range.hi; ++n)
    if (binom(n, q - 1) > N)
      return n - 1;
  return std::nullopt;
}

BoundResult besz_bound(const BigCount &N, std::size_t q, const ShfType &type,
                       GammaMode gamma_mode, ExpMode exp_mode,
                       std::optional<GammaPair> pair) {
  check_q(q);
  const std::size_t u = checked_u(type);
  GammaPair g{type[0], type[1]};
  if (gamma_mode == GammaMode::DesignatedPair) {
    g = pair.value_or(GammaPair{type[0], type[type.t() - 1]});
    std::vector<std::size_t> rest(type.blocks().begin(), type.blocks().end());
    for (std::size_t w : {g.w1, g.w2}) {
      auto it = std::find(rest.begin(), rest.end(), w);
      if (it == rest.end())
        throw DomainError("besz_bound: designated pair (" +
                          std::to_string(g.w1) + "," + std::to_string(g.w2) +
                          ") is not a pair of blocks of {" + type.to_string() +
                          "}");
      rest.erase(it);
    }
  }
  const BigCount gamma = BigCount(g.w1) * g.w2 + u - g.w1 - g.w2;
  return power_bound(q, exponent(N, u, exp_mode),
                     [&](const BigCount &qk) { return gamma * qk; });
}

BoundResult baztran2011_bound(const BigCount &N, std::size_t q,
                              const ShfType &type, ExpMode exp_mode) {
  check_q(q);
  const std::size_t u = checked_u(type);
  return power_bound(q, exponent(N, u, exp_mode),
                     [&](const BigCount &qk) { return BigCount(u - 1) * qk; });
}

BoundResult baztran2013_bound(const BigCount &N, std::size_t q,
                              const ShfType &type, ExpMode exp_mode,
                              Bt2013Variant variant) {
  check_q(q);
  const std::size_t u = checked_u(type);
  if (type.t() < 3)
    throw HypothesisError("bt2013 bound requires t >= 3, got t = " +
                          std::to_string(type.t()));
  if (u < 4)
    throw HypothesisError("bt2013 bound requires u >= 4, got u = " +
                          std::to_string(u));
  if (variant == Bt2013Variant::Printed)
    return baztran2011_bound(N, q, type, exp_mode);
  return power_bound(q, exponent(N, u, exp_mode), [&](const BigCount &qk) {
    // floor(A - 2 sqrt(m)) = A - ceil(sqrt(4m)) for integer A.
    const BigCount four_m = 4 * (3 * qk + 1);
    BigCount root = boost::multiprecision::sqrt(four_m);
    if (root * root != four_m)
      ++root;
    return BigCount(u - 1) * qk + 2 - root;
  });
}

bool omega_check(const BigCount &value) { return value > double_max(); }

std::string render_scientific(const BigCount &value) {
  std::string digits = value.str();
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  const std::size_t exp = digits.size() - 1;
  digits.resize(std::max<std::size_t>(digits.size(), 3), '0');
  return sign + digits.substr(0, 1) + "." + digits.substr(1, 2) + "×10^" +
         std::to_string(exp);
}

std::string to_string(ExpMode m) {
  return m == ExpMode::Ceil ? "ceil" : "floor-plus-one";
}

std::string to_string(GammaMode m) {
  return m == GammaMode::TwoSmallest ? "two-smallest" : "designated-pair";
}

std::string to_string(Bt2013Variant v) {
  return v == Bt2013Variant::Printed ? "printed" : "tabulated";
}

} // namespace shf
