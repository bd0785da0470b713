#pragma once

// Point enumeration and sampling on S_G over F_p, and the empirical checks
// built on it: nilpotency redundancy, the exponential bridge to pairs
// (phi, sigma) with phi sigma phi^-1 = sigma^q, and fibre counts of the
// vector-bundle description of smooth components.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wdsmooth/arith.hpp"
#include "wdsmooth/group_spec.hpp"
#include "wdsmooth/orbits.hpp"

namespace wdsmooth {

/// Upper bound on the number of candidate matrices an exhaustive loop visits.
inline constexpr std::uint64_t kEnumerationBudget = 20'000'000;

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Calls fn(M) for every n x n matrix over F_p, in base-p counting order.
template <class Fn>
void for_each_matrix(const Fp& F, int n, Fn&& fn) {
  const int entries = n * n;
  const std::uint64_t total = ipow(F.characteristic(), entries);
  if (total > kEnumerationBudget) {
    throw BudgetExceeded("exhaustive loop over " + std::to_string(total) + " matrices exceeds budget; use sampling");
  }
  Mat m(n, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (int k = 0; k < entries; ++k) {
      m(k / n, k % n) = static_cast<Elem>(x % F.characteristic());
      x /= F.characteristic();
    }
    fn(static_cast<const Mat&>(m));
  }
}

/// Calls fn(v) for every F_p-combination of the basis vectors.
template <class Fn>
void for_each_in_span(const Fp& F, const std::vector<Vec>& basis, std::size_t length, Fn&& fn) {
  const int k = static_cast<int>(basis.size());
  const std::uint64_t total = ipow(F.characteristic(), k);
  if (total > kEnumerationBudget) throw BudgetExceeded("solution space too large to enumerate");
  std::vector<Elem> coeff(static_cast<std::size_t>(k), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (int i = 0; i < k; ++i) {
      coeff[static_cast<std::size_t>(i)] = static_cast<Elem>(x % F.characteristic());
      x /= F.characteristic();
    }
    Vec v(length, 0);
    for (int i = 0; i < k; ++i) {
      if (coeff[static_cast<std::size_t>(i)] == 0) continue;
      for (std::size_t j = 0; j < length; ++j) {
        v[j] = F.add(v[j], F.mul(coeff[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(i)][j]));
      }
    }
    fn(static_cast<const Vec&>(v));
  }
}

/// Linear system N -> Phi N - q N Phi on gl_n, in flattened coordinates.
inline Mat frobenius_relation_in_n(const Fp& F, const Mat& phi, Elem q) {
  const int n = phi.rows();
  Mat m(n * n, n * n);
  for (int k = 0; k < n * n; ++k) {
    Mat e = Mat::unit(n, k / n, k % n);
    Mat img = sub(F, mul(F, phi, e), scale(F, q, mul(F, e, phi)));
    for (int r = 0; r < n * n; ++r) m(r, k) = img.flat()[static_cast<std::size_t>(r)];
  }
  return m;
}

/// Linear system Phi -> Phi N - q N Phi on gl_n for fixed N.
inline Mat frobenius_relation_in_phi(const Fp& F, const Mat& n_mat, Elem q) {
  const int n = n_mat.rows();
  Mat m(n * n, n * n);
  for (int k = 0; k < n * n; ++k) {
    Mat e = Mat::unit(n, k / n, k % n);
    Mat img = sub(F, mul(F, e, n_mat), scale(F, q, mul(F, n_mat, e)));
    for (int r = 0; r < n * n; ++r) m(r, k) = img.flat()[static_cast<std::size_t>(r)];
  }
  return m;
}

inline void require_gl(const GroupSpec& spec, const char* op) {
  if (spec.kind() != GroupKind::GL) throw UnsupportedType(std::string(op) + " is implemented for GL(n) only");
}

inline std::string partition_key(const IntVec& parts) {
  return OrbitLabel::partition(parts).to_string();
}

struct EnumerationReport {
  std::vector<SGPoint> points;
  std::uint64_t phi_count = 0;                  // |GL_n(F_p)|
  std::map<std::string, std::uint64_t> strata;  // Jordan type of N -> #points
  bool considerate = false;
  std::optional<int> failing_power;
};

/// Every point of S_{GL_n}(F_p): for each invertible Phi, the nilpotent
/// elements of ker(N -> Phi N - q N Phi).
inline EnumerationReport enumerate_sg(const std::shared_ptr<const GroupSpec>& spec, std::uint64_t q_int) {
  require_gl(*spec, "enumerate_sg");
  const Fp& F = spec->field();
  const int n = spec->n();
  QContext ctx(q_int, F.characteristic());
  const Elem q = F.from_int(static_cast<long long>(q_int));
  EnumerationReport rep;
  rep.failing_power = failing_power(ctx, spec->coxeter_number());
  rep.considerate = !rep.failing_power;
  for_each_matrix(F, n, [&](const Mat& phi) {
    if (determinant(F, phi) == 0) return;
    ++rep.phi_count;
    auto basis = kernel_basis(F, frobenius_relation_in_n(F, phi, q));
    for_each_in_span(F, basis, static_cast<std::size_t>(n * n), [&](const Vec& v) {
      Mat nm = unflatten<Fp>(v, n);
      if (!is_nilpotent(F, nm)) return;
      rep.points.push_back({spec, phi, nm, q});
      ++rep.strata[partition_key(jordan_type(F, nm))];
    });
  });
  return rep;
}

/// Deterministic source of field elements and invertible matrices.
class FieldRng {
 public:
  FieldRng(const Fp& F, std::uint64_t seed) : F_(F), gen_(seed) {}

  Elem element() { return static_cast<Elem>(gen_() % F_.characteristic()); }
  Elem nonzero() { return static_cast<Elem>(1 + gen_() % (F_.characteristic() - 1)); }

  Mat matrix(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = element();
    return m;
  }

  Mat invertible(int n) {
    while (true) {
      Mat m = matrix(n);
      if (determinant(F_, m) != 0) return m;
    }
  }

 private:
  Fp F_;
  std::mt19937_64 gen_;
};

/// Nilpotent Jordan form with blocks of the given sizes (superdiagonal ones).
inline Mat jordan_nilpotent(const Fp& F, const IntVec& parts) {
  int n = 0;
  for (int p : parts) n += p;
  Mat m(n, n);
  int start = 0;
  for (int p : parts) {
    for (int i = start; i + 1 < start + p; ++i) m(i, i + 1) = F.one();
    start += p;
  }
  return m;
}

/// Points whose N lies in the Jordan stratum of `parts`: N = g J g^-1 for a
/// random g, and Phi a random invertible solution of Phi N = q N Phi.
inline std::vector<SGPoint> stratum_sample(const std::shared_ptr<const GroupSpec>& spec, std::uint64_t q_int,
                                           const IntVec& parts, int count, std::uint64_t seed) {
  require_gl(*spec, "stratum_sample");
  const Fp& F = spec->field();
  const int n = spec->n();
  int total = 0;
  for (int p : parts) total += p;
  if (total != n) throw ValidationError("partition does not match GL" + std::to_string(n));
  QContext ctx(q_int, F.characteristic());
  const Elem q = F.from_int(static_cast<long long>(q_int));
  FieldRng rng(F, seed);
  const Mat jordan = jordan_nilpotent(F, parts);
  std::vector<SGPoint> out;
  const int max_attempts = 200 * std::max(count, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    Mat g = rng.invertible(n);
    Mat nm = adjoint(F, g, *inverse(F, g), jordan);
    auto basis = kernel_basis(F, frobenius_relation_in_phi(F, nm, q));
    if (basis.empty()) continue;
    Vec v(static_cast<std::size_t>(n * n), 0);
    for (const Vec& b : basis) {
      Elem c = rng.element();
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(c, b[j]));
    }
    Mat phi = unflatten<Fp>(v, n);
    if (determinant(F, phi) == 0) continue;
    out.push_back({spec, phi, nm, q});
  }
  return out;
}

struct NilpotencyReport {
  bool considerate = false;
  std::uint64_t phi_count = 0;
  std::uint64_t solutions = 0;  // pairs (Phi, N) with Phi N = q N Phi, N arbitrary
  std::uint64_t non_nilpotent = 0;
  std::optional<std::pair<Mat, Mat>> witness;
};

/// With N unconstrained in gl_n, counts solutions of Phi N Phi^-1 = q N whose
/// N is not nilpotent. Under considerate q there are none.
inline NilpotencyReport nilpotency_redundancy_check(const GroupSpec& spec, std::uint64_t q_int) {
  require_gl(spec, "nilpotency_redundancy_check");
  const Fp& F = spec.field();
  const int n = spec.n();
  QContext ctx(q_int, F.characteristic());
  const Elem q = F.from_int(static_cast<long long>(q_int));
  NilpotencyReport rep;
  rep.considerate = is_considerate(ctx, spec.coxeter_number());
  for_each_matrix(F, n, [&](const Mat& phi) {
    if (determinant(F, phi) == 0) return;
    ++rep.phi_count;
    auto basis = kernel_basis(F, frobenius_relation_in_n(F, phi, q));
    for_each_in_span(F, basis, static_cast<std::size_t>(n * n), [&](const Vec& v) {
      ++rep.solutions;
      Mat nm = unflatten<Fp>(v, n);
      if (is_nilpotent(F, nm)) return;
      ++rep.non_nilpotent;
      if (!rep.witness) rep.witness = std::make_pair(phi, nm);
    });
  });
  return rep;
}

/// exp(N) = sum_{k<n} N^k / k!; requires p > n.
inline Mat nilpotent_exp(const Fp& F, const Mat& n_mat) {
  const int n = n_mat.rows();
  if (static_cast<int>(F.characteristic()) <= n) throw PreconditionError("exp needs p > n");
  Mat result = Mat::identity(F, n);
  Mat term = Mat::identity(F, n);
  Elem fact = F.one();
  for (int k = 1; k < n; ++k) {
    term = mul(F, term, n_mat);
    fact = F.mul(fact, F.from_int(k));
    result = add(F, result, scale(F, F.inv(fact), term));
  }
  return result;
}

/// log(sigma) = sum_{k<n} (-1)^{k+1} (sigma - 1)^k / k for unipotent sigma.
inline Mat unipotent_log(const Fp& F, const Mat& sigma) {
  const int n = sigma.rows();
  if (static_cast<int>(F.characteristic()) <= n) throw PreconditionError("log needs p > n");
  Mat u = sub(F, sigma, Mat::identity(F, n));
  Mat result(n, n);
  Mat term = Mat::identity(F, n);
  for (int k = 1; k < n; ++k) {
    term = mul(F, term, u);
    Elem c = F.inv(F.from_int(k));
    if (k % 2 == 0) c = F.neg(c);
    result = add(F, result, scale(F, c, term));
  }
  return result;
}

/// With sigma = exp(N): Phi sigma Phi^-1 = sigma^q and log(sigma) = N.
inline bool exp_bridge_check(const SGPoint& pt) {
  const Fp& F = pt.spec->field();
  if (static_cast<int>(F.characteristic()) <= pt.spec->n()) throw PreconditionError("exp bridge needs p > n");
  Mat sigma = nilpotent_exp(F, pt.n_mat);
  auto phi_inv = inverse(F, pt.phi);
  if (!phi_inv) throw PreconditionError("Phi is not invertible");
  Mat lhs = adjoint(F, pt.phi, *phi_inv, sigma);
  Mat rhs = power(F, sigma, pt.q);
  return lhs == rhs && unipotent_log(F, sigma) == pt.n_mat;
}

struct BundleReport {
  int n = 0;
  std::uint64_t base_points = 0;
  std::uint64_t expected_fiber = 0;  // p^(n-1)
  std::map<std::uint64_t, std::uint64_t> fiber_histogram;  // fibre size -> #base points
  bool all_match = false;
  bool exhaustive = false;
};

/// Phi is in Z G_{Phi0} for the regular orbit iff its eigenvalues are
/// z, zq, ..., zq^{n-1} for some z in F_p^x, each of multiplicity one.
inline std::optional<Elem> regular_base_scalar(const Fp& F, const Mat& phi, Elem q) {
  const int n = phi.rows();
  for (Elem z = 1; z < F.characteristic(); ++z) {
    bool ok = true;
    Elem mu = z;
    for (int i = 0; i < n && ok; ++i) {
      Mat shifted = sub(F, phi, scale(F, mu, Mat::identity(F, n)));
      ok = rank(F, shifted) == n - 1;
      mu = F.mul(mu, q);
    }
    if (ok) return z;
  }
  return std::nullopt;
}

/// #{N : Ad(Phi) N = q N} = p^(n-1) over each base point of the regular
/// component. Exhaustive when p^(n^2) fits the budget, otherwise `samples`
/// random conjugates of diag(z, zq, ..., zq^{n-1}).
inline BundleReport bundle_count_check(const GroupSpec& spec, std::uint64_t q_int, int samples, std::uint64_t seed) {
  require_gl(spec, "bundle_count_check");
  const Fp& F = spec.field();
  const int n = spec.n();
  QContext ctx(q_int, F.characteristic());
  if (auto k = failing_power(ctx, n)) {
    throw PreconditionError("q is not considerate: q^" + std::to_string(*k) + " = 1 mod p");
  }
  const Elem q = F.from_int(static_cast<long long>(q_int));
  BundleReport rep;
  rep.n = n;
  rep.expected_fiber = ipow(F.characteristic(), n - 1);
  auto record = [&](const Mat& phi) {
    ++rep.base_points;
    const int k = nullity(F, frobenius_relation_in_n(F, phi, q));
    ++rep.fiber_histogram[ipow(F.characteristic(), k)];
  };
  const std::uint64_t total = ipow(F.characteristic(), n * n);
  if (samples <= 0 && total <= kEnumerationBudget / 8) {
    rep.exhaustive = true;
    for_each_matrix(F, n, [&](const Mat& phi) {
      if (determinant(F, phi) == 0) return;
      if (regular_base_scalar(F, phi, q)) record(phi);
    });
  } else {
    FieldRng rng(F, seed);
    for (int s = 0; s < std::max(samples, 1); ++s) {
      Elem z = rng.nonzero();
      std::vector<Elem> d;
      for (int i = 0; i < n; ++i) {
        d.push_back(z);
        z = F.mul(z, q);
      }
      Mat g = rng.invertible(n);
      Mat phi = adjoint(F, g, *inverse(F, g), Mat::diagonal(d));
      record(phi);
    }
  }
  rep.all_match = rep.base_points > 0 && rep.fiber_histogram.size() == 1 &&
                  rep.fiber_histogram.begin()->first == rep.expected_fiber;
  return rep;
}

}  // namespace wdsmooth
