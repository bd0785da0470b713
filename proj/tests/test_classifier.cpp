#include <gtest/gtest.h>

#include "wdsmooth/classifier.hpp"

using namespace wdsmooth;

namespace {

RootSystem rs_of(const char* g) { return build_root_system(parse_group(g)); }

bool has_reason(const SmoothnessVerdict& v, Reason r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

}  // namespace

TEST(Classify, Examples) {
  QContext ctx(4, 11);  // ord(4 mod 11) = 5
  auto v = classify_component(rs_of("GL4"), OrbitLabel::partition({4}), QContext(2, 0));
  EXPECT_EQ(v.status, Status::Smooth);
  EXPECT_EQ(v.component_count, 1);
  EXPECT_EQ(classify_component(rs_of("GL3"), OrbitLabel::partition({2, 1}), ctx).status, Status::Singular);
  auto nc = classify_component(rs_of("GL2"), OrbitLabel::partition({2}), QContext(4, 5));
  EXPECT_EQ(nc.status, Status::NotCovered);
  EXPECT_EQ(nc.failing_power, 2);
  // X_0 = G: the weak bound r = 1 already covers it
  auto zero = classify_component(rs_of("GL2"), OrbitLabel::partition({1, 1}), QContext(4, 5));
  EXPECT_EQ(zero.status, Status::Smooth);
  EXPECT_TRUE(has_reason(zero, Reason::WeakBound));
}

TEST(Classify, ZeroOrbitAlwaysSmoothWhenConsiderate) {
  for (const char* g : {"GL2", "GL4", "B3", "C4", "D5", "SL3"}) {
    RootSystem rs = rs_of(g);
    OrbitLabel zero = OrbitLabel::partition(std::vector<int>(static_cast<std::size_t>(partition_size(rs.type())), 1));
    auto v = classify_component(rs, zero, QContext(2, 0));
    EXPECT_EQ(v.status, Status::Smooth) << g;
    EXPECT_EQ(v.component_count, 1);
    EXPECT_TRUE(has_reason(v, Reason::ZeroOrbit));
  }
  for (const char* g : {"E6", "E7", "E8", "F4", "G2"}) {
    RootSystem rs = rs_of(g);
    auto v = classify_component(rs, OrbitLabel::zero(rs.rank()), QContext(2, 0));
    EXPECT_EQ(v.status, Status::Smooth) << g;
  }
}

TEST(Classify, GLnSmoothExactlyForRegularAndZero) {
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = build_root_system(parse_group("GL" + std::to_string(n)));
    int smooth = 0;
    for (const auto& o : classical_orbits(rs)) {
      auto v = classify_component(rs, o, QContext(2, 0));
      const bool expected = o.parts().size() == 1 || is_zero_orbit(o);
      EXPECT_EQ(v.status == Status::Smooth, expected) << o.to_string();
      smooth += v.status == Status::Smooth;
    }
    EXPECT_EQ(smooth, 2);
  }
}

TEST(Classify, StatusConsistentWithOrbitType) {
  for (const char* g : {"GL5", "B3", "C3", "D4", "D5"}) {
    RootSystem rs = rs_of(g);
    for (const auto& o : classical_orbits(rs)) {
      auto v = classify_component(rs, o, QContext(2, 0));
      if (v.status == Status::Smooth) {
        EXPECT_TRUE(is_zero_orbit(o) || is_distinguished(rs, o));
      }
      if (v.status == Status::Singular) {
        EXPECT_TRUE(!is_zero_orbit(o) && !is_distinguished(rs, o));
      }
      if (v.component_count) {
        EXPECT_EQ(*v.component_count, 1);
      }
    }
  }
}

TEST(Classify, SharpenedBoundAtMostH) {
  for (const char* g : {"GL4", "B4", "C4", "D5", "D6"}) {
    RootSystem rs = rs_of(g);
    for (const auto& o : classical_orbits(rs)) {
      if (!is_distinguished(rs, o)) continue;
      auto v = classify_component(rs, o, QContext(2, 0));
      ASSERT_TRUE(v.sharpened_order_bound.has_value());
      const IntVec labels = weighted_dynkin(rs, o).labels;
      const bool regular = std::all_of(labels.begin(), labels.end(), [](int x) { return x == 2; });
      EXPECT_LE(*v.sharpened_order_bound, rs.coxeter_number());
      EXPECT_EQ(*v.sharpened_order_bound == rs.coxeter_number(), regular) << g << " " << o.to_string();
    }
  }
  for (const char* g : {"E6", "E7"}) {
    RootSystem rs = rs_of(g);
    for (const auto& e : distinguished_table(rs.type())) {
      auto v = classify_component(rs, e.orbit, QContext(2, 0));
      EXPECT_EQ(v.status, Status::Smooth);
      EXPECT_EQ(*v.sharpened_order_bound == rs.coxeter_number(), e.orbit.name() == g) << e.orbit.name();
    }
  }
}

TEST(Classify, WeakBoundRefinement) {
  // D4 subregular (5,3): r = 4 < h = 6. q = 2 mod 31 has order 5.
  RootSystem d4 = rs_of("D4");
  auto v = classify_component(d4, OrbitLabel::partition({5, 3}), QContext(2, 31));
  EXPECT_EQ(v.status, Status::Smooth);
  EXPECT_TRUE(has_reason(v, Reason::WeakBound));
  EXPECT_EQ(v.failing_power, 5);
  // order 3 does not exceed r = 4
  auto w = classify_component(d4, OrbitLabel::partition({5, 3}), QContext(2, 7));
  EXPECT_EQ(w.status, Status::NotCovered);
  // regular orbit needs full considerateness
  auto x = classify_component(d4, OrbitLabel::partition({7, 1}), QContext(2, 31));
  EXPECT_EQ(x.status, Status::NotCovered);
}

TEST(Classify, UnsupportedExceptionalOrbit) {
  RootSystem e8 = rs_of("E8");
  auto v = classify_component(e8, OrbitLabel::named("E8", WeightedDynkinDiagram{IntVec(8, 2)}), QContext(2, 0));
  EXPECT_EQ(v.status, Status::NotCovered);
  EXPECT_TRUE(has_reason(v, Reason::UnsupportedOrbit));
}

TEST(Classify, InvalidOrbitRejected) {
  EXPECT_THROW(classify_component(rs_of("GL3"), OrbitLabel::partition({2, 2}), QContext(2, 0)), ValidationError);
}

TEST(Product, Examples) {
  QContext ctx(4, 11);
  auto smooth = classify_product({{rs_of("GL2"), OrbitLabel::partition({2})}, {rs_of("GL2"), OrbitLabel::partition({2})}}, ctx);
  EXPECT_EQ(smooth.status, Status::Smooth);
  EXPECT_EQ(smooth.factors.size(), 2u);
  auto singular = classify_product({{rs_of("GL3"), OrbitLabel::partition({2, 1})}, {rs_of("GL2"), OrbitLabel::partition({2})}}, ctx);
  EXPECT_EQ(singular.status, Status::Singular);
  EXPECT_EQ(classify_product({}, ctx).status, Status::Smooth);
  auto nc = classify_product({{rs_of("GL2"), OrbitLabel::partition({2})}, {rs_of("GL4"), OrbitLabel::partition({4})}}, QContext(3, 5));
  EXPECT_EQ(nc.status, Status::NotCovered);
}
