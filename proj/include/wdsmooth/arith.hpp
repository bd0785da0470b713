#pragma once

// Considerateness and banality: multiplicative orders of q modulo l and the
// order of the finite group G(F_q).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdsmooth/error.hpp"
#include "wdsmooth/rootsys.hpp"

namespace wdsmooth {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Frobenius scale q and residue characteristic l (0 for characteristic zero).
struct QContext {
  std::uint64_t q = 2;
  std::uint64_t l = 0;

  QContext() = default;
  QContext(std::uint64_t q_, std::uint64_t l_) : q(q_), l(l_) { check(); }

  void check() const {
    if (q < 2) throw PreconditionError("q must be at least 2");
    if (l != 0 && !is_prime(l)) throw PreconditionError("l = " + std::to_string(l) + " is not prime");
    if (l != 0 && q % l == 0) throw PreconditionError("l divides q; q is not invertible");
  }
};

/// Multiplicative order of q in F_l; nullopt in characteristic zero.
inline std::optional<std::uint64_t> multiplicative_order(const QContext& ctx) {
  ctx.check();
  if (ctx.l == 0) return std::nullopt;
  std::uint64_t x = ctx.q % ctx.l;
  std::uint64_t k = 1;
  while (x != 1) {
    x = mulmod(x, ctx.q, ctx.l);
    ++k;
  }
  return k;
}

/// Smallest k <= h with q^k = 1 in the residue field, if any.
inline std::optional<int> failing_power(const QContext& ctx, int h) {
  if (h < 1) throw PreconditionError("h must be positive");
  auto ord = multiplicative_order(ctx);
  if (ord && *ord <= static_cast<std::uint64_t>(h)) return static_cast<int>(*ord);
  return std::nullopt;
}

/// q^k - 1 invertible for all 1 <= k <= h.
inline bool is_considerate(const QContext& ctx, int h) { return !failing_power(ctx, h).has_value(); }

inline BigInt big_pow(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  BigInt b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// |G(F_q)| = q^N prod_d (q^d - 1), times (q - 1) for the central torus of
/// GL_n / GSp_2n.
inline BigInt chevalley_steinberg_order(const RootSystem& rs, std::uint64_t q) {
  if (q < 2) throw PreconditionError("q must be at least 2");
  BigInt order = big_pow(q, static_cast<unsigned>(rs.num_positive_roots()));
  for (int d : rs.fundamental_degrees()) order *= big_pow(q, static_cast<unsigned>(d)) - 1;
  if (rs.type().with_center) order *= BigInt(q) - 1;
  return order;
}

/// Same product reduced mod l without forming the big integer.
inline std::uint64_t group_order_mod(const RootSystem& rs, std::uint64_t q, std::uint64_t l) {
  std::uint64_t r = powmod(q, static_cast<std::uint64_t>(rs.num_positive_roots()), l);
  for (int d : rs.fundamental_degrees()) {
    r = mulmod(r, (powmod(q, static_cast<std::uint64_t>(d), l) + l - 1) % l, l);
  }
  if (rs.type().with_center) r = mulmod(r, (q % l + l - 1) % l, l);
  return r;
}

/// l does not divide |G(F_q)|.
inline bool is_banal(std::uint64_t l, const RootSystem& rs, std::uint64_t q) {
  if (!is_prime(l)) throw PreconditionError("l = " + std::to_string(l) + " is not prime");
  return group_order_mod(rs, q, l) != 0;
}

struct SweepInstance {
  std::string group;
  std::uint64_t l = 0;
  std::uint64_t q = 0;
};

struct ImplicationReport {
  long long instances = 0;
  long long considerate_count = 0;
  long long banal_count = 0;
  std::vector<SweepInstance> considerate_not_banal;       // expected empty
  std::vector<SweepInstance> type_a_banal_not_considerate;  // expected empty
  /// C3 instances with ord(q mod l) = 5: banal yet not considerate for h = 6.
  std::vector<SweepInstance> sp6_witnesses;
};

inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return false;
}

/// Checks considerate => banal over all primes l <= l_max and prime powers
/// 2 <= q <= q_max with l not dividing q, and banal => considerate for type A.
inline ImplicationReport implication_sweep(const std::vector<DynkinType>& types, std::uint64_t l_max,
                                           std::uint64_t q_max) {
  if (l_max < 2 || q_max < 2) throw PreconditionError("sweep bounds must be at least 2");
  ImplicationReport rep;
  for (const auto& t : types) {
    RootSystem rs = build_root_system(t);
    const int h = rs.coxeter_number();
    for (std::uint64_t l = 2; l <= l_max; ++l) {
      if (!is_prime(l)) continue;
      for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (!is_prime_power(q) || q % l == 0) continue;
        QContext ctx(q, l);
        const bool considerate = is_considerate(ctx, h);
        const bool banal = is_banal(l, rs, q);
        ++rep.instances;
        rep.considerate_count += considerate;
        rep.banal_count += banal;
        SweepInstance inst{to_string(t), l, q};
        if (considerate && !banal) rep.considerate_not_banal.push_back(inst);
        if (t.family == Family::A && banal && !considerate) rep.type_a_banal_not_considerate.push_back(inst);
        if (t.family == Family::C && t.rank == 3 && !t.with_center && *multiplicative_order(ctx) == 5) {
          if (banal && !considerate) rep.sp6_witnesses.push_back(inst);
        }
      }
    }
  }
  return rep;
}

}  // namespace wdsmooth
