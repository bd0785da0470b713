#pragma once

// Smooth / singular verdicts for the components X_C of the moduli of framed
// unipotent Weil-Deligne representations, one per nilpotent orbit C.

#include <optional>
#include <string>
#include <vector>

#include "wdsmooth/arith.hpp"
#include "wdsmooth/orbits.hpp"
#include "wdsmooth/rootsys.hpp"

namespace wdsmooth {

enum class Status { Smooth, Singular, NotCovered };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Smooth: return "Smooth";
    case Status::Singular: return "Singular";
    case Status::NotCovered: return "NotCovered";
  }
  return "?";
}

enum class Reason {
  ZeroOrbit,         // X_0 is G itself
  Distinguished,     // smooth via the associated cocharacter
  NonDistinguished,  // distinguished only in a proper Levi: singular
  WeakBound,         // not considerate, but 1, q, ..., q^r are distinct
  Inconsiderate,     // q^k = 1 for some k <= h
  UnsupportedOrbit,  // no table data for this orbit
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::ZeroOrbit: return "zero-orbit";
    case Reason::Distinguished: return "distinguished";
    case Reason::NonDistinguished: return "non-distinguished";
    case Reason::WeakBound: return "weak-bound";
    case Reason::Inconsiderate: return "inconsiderate";
    case Reason::UnsupportedOrbit: return "unsupported-orbit";
  }
  return "?";
}

struct SmoothnessVerdict {
  std::string group;
  Status status = Status::NotCovered;
  OrbitLabel orbit;
  std::vector<Reason> reasons;
  std::optional<int> component_count;
  std::optional<int> sharpened_order_bound;
  std::optional<int> failing_power;
  bool considerate_checked = false;
  int coxeter_number = 0;
};

struct ProductVerdict {
  Status status = Status::Smooth;
  std::vector<SmoothnessVerdict> factors;
};

/// Verdict for one component. Considerate q: zero and distinguished orbits
/// are smooth, every other orbit is singular. When q is not considerate a
/// zero or distinguished orbit can still be certified smooth if the order of
/// q exceeds the sharpened bound r; otherwise the verdict is NotCovered.
inline SmoothnessVerdict classify_component(const RootSystem& rs, const OrbitLabel& o, const QContext& ctx) {
  validate_orbit(rs, o);
  SmoothnessVerdict v;
  v.group = to_string(rs.type());
  v.orbit = o;
  v.coxeter_number = rs.coxeter_number();
  v.considerate_checked = true;
  const auto failing = failing_power(ctx, rs.coxeter_number());
  v.failing_power = failing;

  const bool zero = is_zero_orbit(o);
  const bool exceptional = !is_classical(rs.type());
  // Exceptional groups: only the zero orbit and the tabulated distinguished
  // orbits carry data.
  if (exceptional && !zero) {
    bool tabulated = rs.type().family == Family::E && (rs.type().rank == 6 || rs.type().rank == 7);
    if (!tabulated) {
      v.status = Status::NotCovered;
      v.reasons.push_back(Reason::UnsupportedOrbit);
      return v;
    }
  }
  const bool distinguished = !zero && is_distinguished(rs, o);

  if (zero || distinguished) {
    v.reasons.push_back(zero ? Reason::ZeroOrbit : Reason::Distinguished);
    const int r = smooth_bound_r(grading_dims(rs, weighted_dynkin(rs, o)));
    if (distinguished) v.sharpened_order_bound = r;
    if (failing) {
      v.reasons.push_back(Reason::Inconsiderate);
      if (*failing > r) {
        v.reasons.push_back(Reason::WeakBound);
        v.status = Status::Smooth;
      } else {
        v.status = Status::NotCovered;
        return v;
      }
    } else {
      v.status = Status::Smooth;
    }
    // X_0 = G is connected; for GL_n the centraliser of a regular nilpotent
    // is connected, so X_C has a single component.
    if (zero || (rs.type().family == Family::A && rs.type().with_center)) v.component_count = 1;
    return v;
  }

  v.reasons.push_back(Reason::NonDistinguished);
  if (failing) {
    v.reasons.push_back(Reason::Inconsiderate);
    v.status = Status::NotCovered;
    return v;
  }
  v.status = Status::Singular;
  return v;
}

/// Components of a product group are products of components; smooth iff
/// every factor is smooth.
inline ProductVerdict classify_product(const std::vector<std::pair<RootSystem, OrbitLabel>>& components,
                                       const QContext& ctx) {
  ProductVerdict out;
  bool any_not_covered = false;
  bool any_singular = false;
  for (const auto& [rs, o] : components) {
    out.factors.push_back(classify_component(rs, o, ctx));
    any_not_covered |= out.factors.back().status == Status::NotCovered;
    any_singular |= out.factors.back().status == Status::Singular;
  }
  out.status = any_not_covered ? Status::NotCovered : any_singular ? Status::Singular : Status::Smooth;
  return out;
}

}  // namespace wdsmooth
