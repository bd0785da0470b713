#pragma once

#include <cstdint>
#include <string>

#include "wdsmooth/arith.hpp"
#include "wdsmooth/error.hpp"

namespace wdsmooth {

/// The prime field F_p. Elements are residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (p > (1u << 30)) throw ValidationError("p too large");
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  /// Signed representative in (-p/2, p/2].
  long long to_signed(value_type a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    return static_cast<value_type>(powmod(a, e, p_));
  }
  value_type inv(value_type a) const {
    if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace wdsmooth
