#pragma once

// Explicit tangent-space lower bounds at P = (Phi0, 0) on a non-distinguished
// component X_C. Four subspaces of g (+) g are assembled from an orbit model
// (e, lambda, L, alpha) and their dimensions are computed exactly.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdsmooth/arith.hpp"
#include "wdsmooth/group_spec.hpp"
#include "wdsmooth/orbits.hpp"

namespace wdsmooth {

/// Data describing a nilpotent e distinguished in a Levi L, with its
/// cocharacter, and a simple root alpha adjacent to L used to move off L.
struct OrbitModel {
  std::shared_ptr<const GroupSpec> spec;
  Mat e;
  IntVec lambda;                 // diagonal weights of the cocharacter
  std::vector<Mat> center_levi;  // basis of Lie(Z_L)
  Mat weyl_alpha;                // representative of s_alpha in N(T)
  std::pair<int, int> alpha;     // root vector of alpha is E_{alpha.first, alpha.second}
  Mat phi0;
  bool distinguished = false;
};

namespace detail {

inline Elem spow(const Fp& F, Elem s, int k) {
  return k >= 0 ? F.pow(s, static_cast<std::uint64_t>(k)) : F.inv(F.pow(s, static_cast<std::uint64_t>(-k)));
}

/// Basis of {X in g : [Z, X] = 0 for Z in center, X_ij = 0 unless w_i - w_j = k}.
/// The weight condition is imposed on integer weights, so no aliasing mod p.
inline std::vector<Mat> graded_levi_piece(const GroupSpec& spec, const std::vector<Mat>& center, const IntVec& w,
                                          int k) {
  const Fp& F = spec.field();
  const int n = spec.n();
  const int d = spec.dim_g();
  std::vector<Vec> rows;
  for (const Mat& z : center) {
    std::vector<Mat> images;
    for (const Mat& b : spec.lie_basis()) images.push_back(bracket(F, z, b));
    for (int r = 0; r < n * n; ++r) {
      Vec row(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] = images[static_cast<std::size_t>(c)].flat()[static_cast<std::size_t>(r)];
      rows.push_back(std::move(row));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] == k) continue;
      Vec row(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] = spec.lie_basis()[static_cast<std::size_t>(c)](i, j);
      rows.push_back(std::move(row));
    }
  }
  Mat system(static_cast<int>(rows.size()), d);
  for (int r = 0; r < system.rows(); ++r)
    for (int c = 0; c < d; ++c) system(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  std::vector<Mat> out;
  for (const Vec& coeff : kernel_basis(F, system)) {
    Mat x(n, n);
    for (int c = 0; c < d; ++c) {
      if (coeff[static_cast<std::size_t>(c)] == 0) continue;
      x = add(F, x, scale(F, coeff[static_cast<std::size_t>(c)], spec.lie_basis()[static_cast<std::size_t>(c)]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline std::vector<Vec> flatten_all(const std::vector<Mat>& ms) {
  std::vector<Vec> out;
  for (const Mat& m : ms) out.push_back(flatten(m));
  return out;
}

inline int span_of(const Fp& F, const std::vector<Mat>& ms) { return span_dim(F, flatten_all(ms)); }

inline std::vector<Mat> conjugate_all(const Fp& F, const Mat& w, const std::vector<Mat>& ms) {
  const Mat w_inv = *inverse(F, w);
  std::vector<Mat> out;
  for (const Mat& m : ms) out.push_back(adjoint(F, w, w_inv, m));
  return out;
}

/// Value of the root with root vector E_{ij} on a diagonal matrix.
inline Elem root_value(const Fp& F, const Mat& diag, std::pair<int, int> ij) {
  return F.div(diag(ij.first, ij.first), diag(ij.second, ij.second));
}

inline Elem q_from_s(const Fp& F, Elem s, int h) {
  if (s == 0) throw PreconditionError("s must be nonzero mod p");
  const Elem q = F.mul(s, s);
  QContext ctx(q, F.characteristic());
  if (auto k = failing_power(ctx, h)) {
    throw PreconditionError("q = s^2 = " + std::to_string(q) + " is not considerate: q^" + std::to_string(*k) +
                            " = 1 mod " + std::to_string(F.characteristic()));
  }
  return q;
}

}  // namespace detail

/// Simple-root indices (1-based, alpha_i = e_i - e_{i+1}) at which two Jordan
/// blocks of `parts` meet and at least one of them has size >= 2.
inline std::vector<int> gl_alpha_candidates(const IntVec& parts) {
  std::vector<int> out;
  int pos = 0;
  for (std::size_t b = 0; b + 1 < parts.size(); ++b) {
    pos += parts[b];
    if (parts[b] >= 2 || parts[b + 1] >= 2) out.push_back(pos);
  }
  return out;
}

/// Model for GL_n and a partition: L = prod GL_{p_j} on consecutive blocks,
/// e regular in L, Phi0 = z * lambda(s) with alpha(Phi0) = 1 and every other
/// block boundary root equal to q.
inline OrbitModel gl_orbit_model(const std::shared_ptr<const GroupSpec>& spec, const IntVec& parts_in, Elem s,
                                 std::optional<int> alpha_choice = std::nullopt) {
  const Fp& F = spec->field();
  const int n = spec->n();
  const OrbitLabel o = OrbitLabel::partition(parts_in);
  const IntVec& parts = o.parts();
  int total = 0;
  for (int p : parts) total += p;
  if (total != n) throw ValidationError("partition " + o.to_string() + " is not a partition of " + std::to_string(n));
  const Elem q = detail::q_from_s(F, s, n);

  OrbitModel m;
  m.spec = spec;
  m.distinguished = parts.size() == 1;
  m.e = Mat(n, n);
  std::vector<int> block_start;
  int pos = 0;
  for (int p : parts) {
    block_start.push_back(pos);
    for (int i = 0; i < p; ++i) {
      m.lambda.push_back(p - 1 - 2 * i);
      if (i + 1 < p) m.e(pos + i, pos + i + 1) = F.one();
    }
    Mat c(n, n);
    for (int i = 0; i < p; ++i) c(pos + i, pos + i) = F.one();
    m.center_levi.push_back(std::move(c));
    pos += p;
  }

  int alpha_index = 0;
  if (!m.distinguished) {
    const auto candidates = gl_alpha_candidates(parts);
    if (candidates.empty()) throw PreconditionError("the zero orbit has no certificate");
    alpha_index = alpha_choice.value_or(candidates.front());
    if (std::find(candidates.begin(), candidates.end(), alpha_index) == candidates.end()) {
      throw ValidationError("alpha_" + std::to_string(alpha_index) + " is not a block boundary adjacent to the Levi");
    }
    m.alpha = {alpha_index - 1, alpha_index};
    m.weyl_alpha = Mat(n, n);
    for (int i = 0; i < n; ++i) {
      int j = i == alpha_index - 1 ? alpha_index : i == alpha_index ? alpha_index - 1 : i;
      m.weyl_alpha(i, j) = F.one();
    }
  }

  // z is constant on blocks: z_{j+1} = z_j s^{1-p_j} s^{1-p_{j+1}} / target.
  std::vector<Elem> z{F.one()};
  for (std::size_t b = 0; b + 1 < parts.size(); ++b) {
    const int boundary = block_start[b + 1];
    const Elem target = boundary == alpha_index ? F.one() : q;
    Elem next = F.mul(z.back(), detail::spow(F, s, 2 - parts[b] - parts[b + 1]));
    z.push_back(F.div(next, target));
  }
  std::vector<Elem> d;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (int i = 0; i < parts[b]; ++i) {
      d.push_back(F.mul(z[b], detail::spow(F, s, m.lambda[d.size()])));
    }
  }
  m.phi0 = Mat::diagonal(d);
  return m;
}

/// The GSp_4 example: L the Levi of the short simple root, e = E12 - E34,
/// lambda = (1,-1,1,-1), Phi0 = diag(q,1,1,q^-1), alpha the long simple root.
inline OrbitModel gsp4_orbit_model(const std::shared_ptr<const GroupSpec>& spec, Elem s) {
  const Fp& F = spec->field();
  const Elem q = detail::q_from_s(F, s, spec->coxeter_number());
  OrbitModel m;
  m.spec = spec;
  m.e = Mat(4, 4);
  m.e(0, 1) = F.one();
  m.e(2, 3) = F.neg(F.one());
  m.lambda = {1, -1, 1, -1};
  m.center_levi = {Mat::identity(F, 4), Mat::diagonal(std::vector<Elem>{1, 1, F.neg(1), F.neg(1)})};
  m.alpha = {1, 2};
  m.phi0 = Mat::diagonal(std::vector<Elem>{q, 1, 1, F.inv(q)});
  // Swap of the middle coordinates; the sign keeps it a similitude.
  for (Elem sign : {F.one(), F.neg(F.one())}) {
    Mat w(4, 4);
    w(0, 0) = F.one();
    w(3, 3) = F.one();
    w(1, 2) = sign;
    w(2, 1) = F.neg(sign);
    if (spec->contains_group(w)) {
      m.weyl_alpha = w;
      return m;
    }
  }
  throw CertificateInvalid("no similitude representative of s_alpha found");
}

/// Orbit model by group kind; GSp_4 supports the (2,2) orbit of its example.
inline OrbitModel orbit_model(const std::shared_ptr<const GroupSpec>& spec, const IntVec& parts, Elem s,
                              std::optional<int> alpha_choice = std::nullopt) {
  if (spec->kind() == GroupKind::GL) return gl_orbit_model(spec, parts, s, alpha_choice);
  IntVec sorted = OrbitLabel::partition(parts).parts();
  if (sorted != IntVec{2, 2}) throw UnsupportedType("GSp4 certificates are implemented for the orbit 2,2 only");
  if (alpha_choice && *alpha_choice != 2) throw ValidationError("GSp4: alpha must be the long simple root 2");
  return gsp4_orbit_model(spec, s);
}

inline Mat build_phi0(const std::shared_ptr<const GroupSpec>& spec, const IntVec& parts, Elem s,
                      std::optional<int> alpha_choice = std::nullopt) {
  return orbit_model(spec, parts, s, alpha_choice).phi0;
}

struct EpsilonCertificate {
  Mat phi0;
  Elem q = 0;
  int eps0 = 0;
  int eps1 = 0;
  int eps2 = 0;
  int eps3 = 0;
  int orbit_dim = 0;       // dim im(Ad(Phi0^-1) - 1)
  int torus_dim = 0;       // dim Lie(Z_L) + s_alpha Lie(Z_L)
  int unipotent_dim = 0;   // 1
  int phi_span_dim = 0;
  int n_span_dim = 0;
  int lower_bound = 0;
  int dim_g = 0;
  int stabilizer_dim = 0;
  int levi_grade0_dim = 0;
  int levi_grade2_dim = 0;
  int center_dim = 0;
  int off_orbit_contribution = 0;  // torus + unipotent + N parts
  int ambient_tangent_dim = 0;     // dim T_P S_G
  bool direct_sum = false;
  bool verified_tangency = false;
};

/// Builds the four subspaces at P = (Phi0, 0) and checks every generator.
inline EpsilonCertificate epsilon_certificate(const OrbitModel& m) {
  const GroupSpec& spec = *m.spec;
  const Fp& F = spec.field();
  const int n = spec.n();
  if (m.distinguished) throw PreconditionError("the orbit is distinguished: X_C is smooth, no certificate");
  EpsilonCertificate c;
  c.phi0 = m.phi0;
  c.dim_g = spec.dim_g();

  auto fail = [](const std::string& what) { throw CertificateInvalid(what); };
  if (!spec.contains_group(m.phi0)) fail("Phi0 is not in G");
  if (!spec.contains_lie(m.e)) fail("e is not in g");
  const Mat phi_inv = *inverse(F, m.phi0);

  // q is read off from Ad(Phi0) e = q e.
  {
    int i = -1, j = -1;
    for (int a = 0; a < n && i < 0; ++a)
      for (int b = 0; b < n; ++b)
        if (m.e(a, b) != 0) {
          i = a;
          j = b;
          break;
        }
    if (i < 0) fail("e is zero");
    c.q = F.div(m.phi0(i, i), m.phi0(j, j));
  }
  if (adjoint(F, m.phi0, phi_inv, m.e) != scale(F, c.q, m.e)) fail("Ad(Phi0) e != q e");
  if (detail::root_value(F, m.phi0, m.alpha) != F.one()) fail("alpha(Phi0) != 1");
  Mat e_minus = Mat::unit(n, m.alpha.second, m.alpha.first);
  if (!spec.contains_lie(e_minus)) fail("e_-alpha is not in g");
  if (!bracket(F, e_minus, m.e).is_zero()) fail("[e_-alpha, e] != 0");
  if (!spec.contains_group(m.weyl_alpha)) fail("Weyl representative is not in G");
  for (const Mat& z : m.center_levi) {
    if (!spec.contains_lie(z)) fail("Lie(Z_L) basis element is not in g");
  }

  // (a) orbit part
  std::vector<Mat> orbit;
  for (const Mat& b : spec.lie_basis()) orbit.push_back(sub(F, adjoint(F, phi_inv, m.phi0, b), b));
  c.orbit_dim = detail::span_of(F, orbit);
  c.stabilizer_dim = eigenspace_dim(spec, m.phi0, F.one());

  // (b) torus part
  std::vector<Mat> torus = m.center_levi;
  for (const Mat& t : detail::conjugate_all(F, m.weyl_alpha, m.center_levi)) torus.push_back(t);
  c.center_dim = detail::span_of(F, m.center_levi);
  c.torus_dim = detail::span_of(F, torus);

  // (c) unipotent part
  c.unipotent_dim = 1;

  // (d) N part
  const auto grade0 = detail::graded_levi_piece(spec, m.center_levi, m.lambda, 0);
  const auto grade2 = detail::graded_levi_piece(spec, m.center_levi, m.lambda, 2);
  c.levi_grade0_dim = static_cast<int>(grade0.size());
  c.levi_grade2_dim = static_cast<int>(grade2.size());
  {
    auto with_e = grade2;
    with_e.push_back(m.e);
    if (detail::span_of(F, with_e) != detail::span_of(F, grade2)) fail("e is not in g_L(lambda, 2)");
  }
  std::vector<Mat> npart = grade2;
  for (const Mat& x : detail::conjugate_all(F, m.weyl_alpha, grade2)) npart.push_back(x);
  bool tangent_ok = true;
  for (const Mat& x : npart) {
    if (!spec.contains_lie(x) || adjoint(F, m.phi0, phi_inv, x) != scale(F, c.q, x)) tangent_ok = false;
  }
  if (!tangent_ok) fail("an N-part generator violates Ad(Phi0) M = q M");
  c.n_span_dim = detail::span_of(F, npart);

  std::vector<Mat> phi_part = orbit;
  for (const Mat& t : torus) phi_part.push_back(t);
  phi_part.push_back(e_minus);
  c.phi_span_dim = detail::span_of(F, phi_part);
  c.direct_sum = c.phi_span_dim == c.orbit_dim + c.torus_dim + c.unipotent_dim;

  // Every (X, 0) and (0, M) above must lie in T_P S_G.
  const Mat tmap = tangent_map(spec, m.phi0, Mat(n, n), c.q);
  auto in_kernel = [&](const Mat& x, bool n_side) {
    const int d = spec.dim_g();
    // coordinates of x in the Lie basis
    Mat sys(n * n, d + 1);
    for (int k = 0; k < d; ++k)
      for (int r = 0; r < n * n; ++r) sys(r, k) = spec.lie_basis()[static_cast<std::size_t>(k)].flat()[static_cast<std::size_t>(r)];
    for (int r = 0; r < n * n; ++r) sys(r, d) = x.flat()[static_cast<std::size_t>(r)];
    auto ker = kernel_basis(F, sys);
    for (const Vec& v : ker) {
      if (v[static_cast<std::size_t>(d)] == 0) continue;
      const Elem norm = F.neg(F.inv(v[static_cast<std::size_t>(d)]));
      Vec full(static_cast<std::size_t>(2 * d), 0);
      for (int k = 0; k < d; ++k) full[static_cast<std::size_t>(n_side ? d + k : k)] = F.mul(norm, v[static_cast<std::size_t>(k)]);
      for (int r = 0; r < tmap.rows(); ++r) {
        Elem acc = 0;
        for (int k = 0; k < 2 * d; ++k) acc = F.add(acc, F.mul(tmap(r, k), full[static_cast<std::size_t>(k)]));
        if (acc != 0) return false;
      }
      return true;
    }
    return false;
  };
  for (const Mat& x : phi_part) tangent_ok = tangent_ok && in_kernel(x, false);
  for (const Mat& x : npart) tangent_ok = tangent_ok && in_kernel(x, true);
  if (!tangent_ok) fail("a generator is not tangent to S_G at P");
  c.verified_tangency = true;

  c.eps0 = c.stabilizer_dim - c.levi_grade0_dim;
  c.eps1 = c.torus_dim - c.center_dim;
  c.eps2 = c.n_span_dim - c.levi_grade2_dim;
  c.eps3 = c.unipotent_dim;
  c.lower_bound = c.phi_span_dim + c.n_span_dim;
  c.off_orbit_contribution = c.torus_dim + c.unipotent_dim + c.n_span_dim;
  c.ambient_tangent_dim = spec.dim_g() + eigenspace_dim(spec, m.phi0, c.q);
  if (c.lower_bound <= c.dim_g) fail("lower bound does not exceed dim G");
  return c;
}

inline EpsilonCertificate epsilon_certificate(const std::shared_ptr<const GroupSpec>& spec, const IntVec& parts,
                                              Elem s, std::optional<int> alpha_choice = std::nullopt) {
  return epsilon_certificate(orbit_model(spec, parts, s, alpha_choice));
}

}  // namespace wdsmooth
