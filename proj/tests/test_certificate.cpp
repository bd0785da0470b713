#include <gtest/gtest.h>

#include "wdsmooth/certificate.hpp"

using namespace wdsmooth;

namespace {

std::shared_ptr<const GroupSpec> gl(std::uint32_t p, int n) {
  return std::make_shared<const GroupSpec>(GroupSpec::gl(Fp(p), n));
}

std::shared_ptr<const GroupSpec> gsp4(std::uint32_t p) {
  return std::make_shared<const GroupSpec>(GroupSpec::gsp4(Fp(p)));
}

}  // namespace

TEST(Phi0, RegularGLn) {
  for (int n = 2; n <= 4; ++n) {
    auto spec = gl(13, n);
    const Fp& F = spec->field();
    const Elem s = 2;  // q = 4 has order 6 mod 13
    Mat phi0 = build_phi0(spec, {n}, s);
    for (int i = 0; i < n; ++i) {
      const int w = n - 1 - 2 * i;
      Elem expected = w >= 0 ? F.pow(s, static_cast<std::uint64_t>(w)) : F.inv(F.pow(s, static_cast<std::uint64_t>(-w)));
      EXPECT_EQ(phi0(i, i), expected);
    }
  }
}

TEST(Phi0, GL3SubregularEigenvalues) {
  auto spec = gl(11, 3);
  const Fp& F = spec->field();
  Mat phi0 = build_phi0(spec, {2, 1}, 2);
  EXPECT_EQ(phi0(0, 0), 2u);
  EXPECT_EQ(phi0(1, 1), F.inv(2));
  EXPECT_EQ(phi0(2, 2), F.inv(2));
}

TEST(Phi0, GSp4Example) {
  auto spec = gsp4(11);
  Mat phi0 = build_phi0(spec, {2, 2}, 2);
  EXPECT_EQ(phi0, Mat::diagonal(std::vector<Elem>{4, 1, 1, 3}));
}

TEST(Phi0, InconsiderateRejected) {
  // s = 2 mod 7: q = 4 has order 3 <= h = 3
  EXPECT_THROW(build_phi0(gl(7, 3), {2, 1}, 2), PreconditionError);
  EXPECT_THROW(build_phi0(gl(7, 3), {2, 1}, 0), PreconditionError);
}

TEST(Certificate, GL3Subregular) {
  EpsilonCertificate c = epsilon_certificate(gl(11, 3), {2, 1}, 2);
  EXPECT_EQ(c.eps0, 2);
  EXPECT_EQ(c.eps1, 1);
  EXPECT_EQ(c.eps2, 1);
  EXPECT_EQ(c.eps3, 1);
  EXPECT_EQ(c.orbit_dim, 4);
  EXPECT_EQ(c.torus_dim, 3);
  EXPECT_EQ(c.phi_span_dim, 8);
  EXPECT_EQ(c.n_span_dim, 2);
  EXPECT_EQ(c.lower_bound, 10);
  EXPECT_EQ(c.dim_g, 9);
  EXPECT_EQ(c.ambient_tangent_dim, 11);
  EXPECT_TRUE(c.direct_sum);
  EXPECT_TRUE(c.verified_tangency);
}

TEST(Certificate, GSp4Example) {
  EpsilonCertificate c = epsilon_certificate(gsp4(11), {2, 2}, 2);
  EXPECT_EQ(c.orbit_dim, 6);
  EXPECT_EQ(c.off_orbit_contribution, 6);
  EXPECT_EQ(c.lower_bound, 12);
  EXPECT_EQ(c.dim_g, 11);
  EXPECT_GT(c.lower_bound, c.dim_g);
  EXPECT_LE(c.lower_bound, c.ambient_tangent_dim);
  EXPECT_TRUE(c.verified_tangency);
}

TEST(Certificate, GL4Orbits) {
  auto spec = gl(13, 4);
  for (const IntVec& parts : {IntVec{2, 1, 1}, IntVec{2, 2}, IntVec{3, 1}}) {
    EpsilonCertificate c = epsilon_certificate(spec, parts, 2);
    EXPECT_GE(c.lower_bound, 17);
    EXPECT_LE(c.lower_bound, c.ambient_tangent_dim);
    EXPECT_GE(c.eps1, 1);
    EXPECT_GE(c.eps2, 1);
    EXPECT_EQ(c.eps3, 1);
    EXPECT_EQ(c.lower_bound, c.dim_g + c.eps1 + c.eps2 + c.eps3 - c.eps0);
  }
}

TEST(Certificate, ExcessFormulaAcrossPrimes) {
  for (std::uint32_t p : {11u, 13u, 29u, 31u}) {
    for (Elem s = 2; s < 6; ++s) {
      auto spec = gl(p, 3);
      QContext ctx(Fp(p).mul(s, s), p);
      if (!is_considerate(ctx, 3)) continue;
      EpsilonCertificate c = epsilon_certificate(spec, {2, 1}, s);
      EXPECT_EQ(c.lower_bound, c.dim_g + c.eps1 + c.eps2 + c.eps3 - c.eps0) << "p=" << p << " s=" << s;
      EXPECT_EQ(c.lower_bound, 10);
    }
  }
}

TEST(Certificate, AlternativeAlpha) {
  auto spec = gl(13, 4);
  // (2,1,1): blocks meet at alpha_2 and alpha_3; only alpha_2 touches the Levi
  EXPECT_THROW(epsilon_certificate(spec, {2, 1, 1}, 2, 3), ValidationError);
  // (2,2): single boundary alpha_2
  EXPECT_NO_THROW(epsilon_certificate(spec, {2, 2}, 2, 2));
  // (1,1,2) is reordered to (2,1,1)
  EXPECT_EQ(epsilon_certificate(spec, {1, 1, 2}, 2).lower_bound, epsilon_certificate(spec, {2, 1, 1}, 2).lower_bound);
}

TEST(Certificate, Preconditions) {
  EXPECT_THROW(epsilon_certificate(gl(11, 3), {3}, 2), PreconditionError);
  EXPECT_THROW(epsilon_certificate(gl(11, 3), {1, 1, 1}, 2), PreconditionError);
  EXPECT_THROW(epsilon_certificate(gl(11, 3), {2, 2}, 2), ValidationError);
  EXPECT_THROW(epsilon_certificate(gsp4(11), {2, 1, 1}, 2), UnsupportedType);
}

TEST(Certificate, BrokenNormalizationDetected) {
  OrbitModel m = gl_orbit_model(gl(11, 3), {2, 1}, 2);
  m.phi0 = Mat::diagonal(std::vector<Elem>{2, 6, 1});  // alpha(Phi0) != 1
  EXPECT_THROW(epsilon_certificate(m), CertificateInvalid);
}
