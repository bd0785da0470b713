#pragma once

// Root systems of the split reductive groups handled by the library, in
// integer coordinates. Roots are carried as coefficient vectors over the
// simple roots; the simple roots themselves also have a Euclidean
// realization (scaled by 2 for E and F so that every coordinate is an
// integer).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wdsmooth/error.hpp"

namespace wdsmooth {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

/// Dynkin type plus a flag for the one-dimensional centre of GL_n / GSp_2n.
struct DynkinType {
  Family family = Family::A;
  int rank = 1;
  bool with_center = false;

  auto operator<=>(const DynkinType&) const = default;
};

inline bool is_admissible(const DynkinType& t) {
  if (t.rank < 1) return false;
  switch (t.family) {
    case Family::A: break;
    case Family::B: if (t.rank < 2) return false; break;
    case Family::C: if (t.rank < 2) return false; break;
    case Family::D: if (t.rank < 3) return false; break;
    case Family::E: if (t.rank < 6 || t.rank > 8) return false; break;
    case Family::F: if (t.rank != 4) return false; break;
    case Family::G: if (t.rank != 2) return false; break;
  }
  if (t.with_center && t.family != Family::A && t.family != Family::C) return false;
  return true;
}

inline void validate(const DynkinType& t) {
  if (!is_admissible(t)) {
    throw ValidationError("inadmissible Dynkin type " + std::string(1, family_letter(t.family)) +
                          std::to_string(t.rank) + (t.with_center ? " (with centre)" : ""));
  }
}

inline bool is_classical(const DynkinType& t) {
  return t.family == Family::A || t.family == Family::B || t.family == Family::C ||
         t.family == Family::D;
}

/// "GL3", "GSp4" for the reductive variants, otherwise the Cartan name "D5".
inline std::string to_string(const DynkinType& t) {
  if (t.with_center && t.family == Family::A) return "GL" + std::to_string(t.rank + 1);
  if (t.with_center && t.family == Family::C) return "GSp" + std::to_string(2 * t.rank);
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

/// Parses a single group name: Cartan names (A2, D5, E7, ...) or matrix-group
/// names GLn, SLn, Spn, GSpn, SOn.
inline DynkinType parse_group(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(c)));
  }
  auto fail = [&]() -> DynkinType { throw ValidationError("cannot parse group '" + std::string(text) + "'"); };
  std::size_t digits = s.find_first_of("0123456789");
  if (digits == std::string::npos || digits == 0) return fail();
  std::string head = s.substr(0, digits);
  std::string tail = s.substr(digits);
  if (tail.find_first_not_of("0123456789") != std::string::npos || tail.size() > 3) return fail();
  int n = std::stoi(tail);

  DynkinType t;
  if (head.size() == 1 && std::string_view("ABCDEFG").find(head[0]) != std::string_view::npos) {
    t.family = static_cast<Family>(head[0] - 'A');
    t.rank = n;
  } else if (head == "GL" || head == "SL") {
    if (n < 2) return fail();
    t = {Family::A, n - 1, head == "GL"};
  } else if (head == "SP" || head == "GSP") {
    if (n < 4 || n % 2 != 0) return fail();
    t = {Family::C, n / 2, head == "GSP"};
  } else if (head == "SO") {
    if (n < 5) return fail();
    t = n % 2 == 1 ? DynkinType{Family::B, (n - 1) / 2, false} : DynkinType{Family::D, n / 2, false};
  } else {
    return fail();
  }
  validate(t);
  return t;
}

/// One edge of a Dynkin diagram. `shorter` is the endpoint carrying the
/// shorter root (the arrow head), or -1 for a simple edge.
struct DynkinEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
  int shorter = -1;
};

namespace detail {

inline long long dot(const IntVec& x, const IntVec& y) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<long long>(x[i]) * y[i];
  return s;
}

inline IntVec unit(int n, int i, int value = 1) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = value;
  return v;
}

// Bourbaki numbering throughout.
inline IntMatrix euclidean_simple_roots(const DynkinType& t) {
  const int n = t.rank;
  IntMatrix roots;
  auto diff = [](int dim, int i, int j) {
    IntVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(j)] = -1;
    return v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) roots.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(n, i, i + 1));
      roots.push_back(unit(n, n - 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(n, i, i + 1));
      roots.push_back(unit(n, n - 1, 2));
      break;
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(n, i, i + 1));
      IntVec last(static_cast<std::size_t>(n), 0);
      last[static_cast<std::size_t>(n - 2)] = 1;
      last[static_cast<std::size_t>(n - 1)] = 1;
      roots.push_back(last);
      break;
    }
    case Family::E: {
      // E8 simple roots scaled by 2; E6 and E7 are the first 6 and 7.
      IntMatrix e8 = {{1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0},
                      {-2, 2, 0, 0, 0, 0, 0, 0},      {0, -2, 2, 0, 0, 0, 0, 0},
                      {0, 0, -2, 2, 0, 0, 0, 0},      {0, 0, 0, -2, 2, 0, 0, 0},
                      {0, 0, 0, 0, -2, 2, 0, 0},      {0, 0, 0, 0, 0, -2, 2, 0}};
      roots.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F:
      // scaled by 2: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
      roots = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case Family::G:
      // short root first, inside the sum-zero plane of Z^3
      roots = {{1, -1, 0}, {-2, 1, 1}};
      break;
  }
  return roots;
}

inline IntMatrix cartan_from_simple_roots(const IntMatrix& simple) {
  const std::size_t n = simple.size();
  IntMatrix cartan(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cartan[i][j] = static_cast<int>(2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]));
    }
  }
  return cartan;
}

}  // namespace detail

/// Cartan matrix with entries cartan[i][j] = <alpha_i, alpha_j^vee>.
inline IntMatrix cartan_matrix(const DynkinType& t) {
  validate(t);
  return detail::cartan_from_simple_roots(detail::euclidean_simple_roots(t));
}

/// Closed-form Weyl group orders; cross-checked against the degree product.
inline std::uint64_t weyl_order_formula(const DynkinType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

class RootSystem {
 public:
  const DynkinType& type() const { return type_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  int reductive_rank() const { return rank() + (type_.with_center ? 1 : 0); }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  int num_roots() const { return 2 * num_positive_roots(); }
  /// dim of the Lie algebra: |Phi| + reductive rank.
  int dim() const { return num_roots() + reductive_rank(); }

  const IntMatrix& simple_roots() const { return simple_roots_; }
  /// Positive roots as coefficient vectors over the simple roots, sorted by
  /// height and then lexicographically.
  const IntMatrix& positive_roots() const { return positive_roots_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<DynkinEdge>& edges() const { return edges_; }
  const std::vector<int>& fundamental_degrees() const { return degrees_; }
  int coxeter_number() const { return coxeter_; }
  std::uint64_t weyl_order() const { return weyl_order_; }

  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < rank(); ++j) {
      if (adjacent(i, j)) out.push_back(j);
    }
    return out;
  }

  /// Euclidean vector of the root with the given simple-root coefficients.
  IntVec euclidean(const IntVec& coefficients) const {
    IntVec v(simple_roots_.front().size(), 0);
    for (int i = 0; i < rank(); ++i) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += coefficients[i] * simple_roots_[i][k];
    }
    return v;
  }

  static int height(const IntVec& coefficients) {
    return std::accumulate(coefficients.begin(), coefficients.end(), 0);
  }

  /// <beta, alpha_j^vee> for beta given by simple-root coefficients.
  int coroot_pairing(const IntVec& coefficients, int j) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += coefficients[i] * cartan_[i][j];
    return s;
  }

  bool is_positive_root(const IntVec& coefficients) const {
    return root_set_.count(coefficients) != 0;
  }

  friend RootSystem build_root_system(const DynkinType& t);

 private:
  DynkinType type_;
  IntMatrix simple_roots_;
  IntMatrix positive_roots_;
  IntMatrix cartan_;
  std::vector<DynkinEdge> edges_;
  std::vector<int> degrees_;
  int coxeter_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::set<IntVec> root_set_;
};

/// Builds the root system of `t`. Positive roots come from the root-string
/// algorithm; degrees from the height distribution (the exponents are the
/// dual partition of the number of positive roots of each height).
inline RootSystem build_root_system(const DynkinType& t) {
  validate(t);
  RootSystem rs;
  rs.type_ = t;
  rs.simple_roots_ = detail::euclidean_simple_roots(t);
  rs.cartan_ = detail::cartan_from_simple_roots(rs.simple_roots_);
  const int n = t.rank;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rs.cartan_[i][j] == 0) continue;
      DynkinEdge e;
      e.a = i;
      e.b = j;
      e.multiplicity = rs.cartan_[i][j] * rs.cartan_[j][i];
      if (e.multiplicity > 1) {
        long long li = detail::dot(rs.simple_roots_[i], rs.simple_roots_[i]);
        long long lj = detail::dot(rs.simple_roots_[j], rs.simple_roots_[j]);
        e.shorter = li < lj ? i : j;
      }
      rs.edges_.push_back(e);
    }
  }

  std::vector<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    queue.push_back(detail::unit(n, i));
    rs.root_set_.insert(queue.back());
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const IntVec beta = queue[head];
    for (int j = 0; j < n; ++j) {
      int down = 0;
      IntVec probe = beta;
      while (true) {
        probe[j] -= 1;
        if (probe[j] < 0 || !rs.root_set_.count(probe)) break;
        ++down;
      }
      int up = down - rs.coroot_pairing(beta, j);
      if (up > 0) {
        IntVec next = beta;
        next[j] += 1;
        if (rs.root_set_.insert(next).second) queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end(), [](const IntVec& x, const IntVec& y) {
    int hx = RootSystem::height(x), hy = RootSystem::height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  rs.positive_roots_ = std::move(queue);

  std::map<int, int> per_height;
  for (const auto& r : rs.positive_roots_) ++per_height[RootSystem::height(r)];
  // #{exponents >= k} = #{positive roots of height k}
  std::vector<int> exponents;
  const int max_height = per_height.rbegin()->first;
  std::vector<int> counts(static_cast<std::size_t>(max_height) + 1, 0);
  for (auto [h, c] : per_height) counts[static_cast<std::size_t>(h)] = c;
  for (int j = 0; j < n; ++j) {
    int m = 0;
    while (m + 1 <= max_height && counts[static_cast<std::size_t>(m + 1)] > j) ++m;
    exponents.push_back(m);
  }
  for (int m : exponents) rs.degrees_.push_back(m + 1);
  std::sort(rs.degrees_.begin(), rs.degrees_.end());

  rs.coxeter_ = 2 * rs.num_positive_roots() / n;
  std::uint64_t product = 1;
  for (int d : rs.degrees_) product *= static_cast<std::uint64_t>(d);
  rs.weyl_order_ = product;
  if (product != weyl_order_formula(t)) {
    throw Error("internal: degree product disagrees with Weyl order for " + to_string(t));
  }
  return rs;
}

inline int coxeter_number(const RootSystem& rs) { return rs.coxeter_number(); }
inline const std::vector<int>& fundamental_degrees(const RootSystem& rs) {
  return rs.fundamental_degrees();
}

/// s_alpha on a root-lattice element written in simple-root coordinates.
inline IntVec reflect_coefficients(const RootSystem& rs, int alpha, const IntVec& coefficients) {
  if (alpha < 0 || alpha >= rs.rank()) throw ValidationError("simple root index out of range");
  IntVec out = coefficients;
  out[static_cast<std::size_t>(alpha)] -= rs.coroot_pairing(coefficients, alpha);
  return out;
}

/// s_alpha(v) = v - <v, alpha^vee> alpha on a Euclidean weight vector. The
/// pairing must be integral in the stored coordinates.
inline IntVec simple_reflection_weights(const RootSystem& rs, int alpha, const IntVec& v) {
  if (alpha < 0 || alpha >= rs.rank()) throw ValidationError("simple root index out of range");
  const IntVec& a = rs.simple_roots()[static_cast<std::size_t>(alpha)];
  if (v.size() != a.size()) throw ValidationError("weight vector has wrong dimension");
  long long num = 2 * detail::dot(v, a);
  long long den = detail::dot(a, a);
  if (num % den != 0) throw ValidationError("pairing with coroot is not integral in these coordinates");
  long long k = num / den;
  IntVec out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<int>(k * a[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Levi subsets

struct LeviFactor {
  DynkinType type;
  /// embedding[k] is the ambient index of the factor's k-th (Bourbaki) simple root.
  std::vector<int> embedding;
};

struct LeviSubset {
  RootSystem ambient;
  std::vector<int> subset;  // sorted ambient indices
  std::vector<LeviFactor> factors;

  bool contains(int i) const { return std::binary_search(subset.begin(), subset.end(), i); }
};

namespace detail {

inline std::vector<DynkinType> candidate_types(int k) {
  std::vector<DynkinType> out{{Family::A, k, false}};
  if (k >= 2) out.push_back({Family::B, k, false});
  if (k >= 3) out.push_back({Family::C, k, false});
  if (k >= 4) out.push_back({Family::D, k, false});
  if (k >= 6 && k <= 8) out.push_back({Family::E, k, false});
  if (k == 4) out.push_back({Family::F, 4, false});
  if (k == 2) out.push_back({Family::G, 2, false});
  return out;
}

// Backtracking search for a bijection factor-index -> ambient node that
// preserves Cartan entries (edge multiplicity and arrow direction).
inline bool match_cartan(const IntMatrix& pattern, const IntMatrix& ambient,
                         const std::vector<int>& nodes, std::vector<int>& assignment,
                         std::vector<bool>& used) {
  const std::size_t k = assignment.size();
  if (k == pattern.size()) return true;
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    if (used[c]) continue;
    const int node = nodes[c];
    bool ok = true;
    for (std::size_t prev = 0; prev < k && ok; ++prev) {
      const int other = assignment[prev];
      ok = pattern[k][prev] == ambient[static_cast<std::size_t>(node)][static_cast<std::size_t>(other)] &&
           pattern[prev][k] == ambient[static_cast<std::size_t>(other)][static_cast<std::size_t>(node)];
    }
    if (!ok) continue;
    used[c] = true;
    assignment.push_back(node);
    if (match_cartan(pattern, ambient, nodes, assignment, used)) return true;
    assignment.pop_back();
    used[c] = false;
  }
  return false;
}

}  // namespace detail

/// Identifies a connected set of ambient nodes with a Dynkin type and an
/// ordered embedding of that type's Bourbaki-numbered simple roots.
inline LeviFactor identify_component(const RootSystem& ambient, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  for (const DynkinType& candidate : detail::candidate_types(k)) {
    IntMatrix pattern = cartan_matrix(candidate);
    std::vector<int> assignment;
    std::vector<bool> used(nodes.size(), false);
    if (detail::match_cartan(pattern, ambient.cartan(), nodes, assignment, used)) {
      return {candidate, assignment};
    }
  }
  throw Error("internal: could not identify Levi component");
}

/// Connected components of the induced subdiagram on `subset`, each typed.
inline LeviSubset levi_factors(const RootSystem& rs, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int i : subset) {
    if (i < 0 || i >= rs.rank()) throw ValidationError("Levi subset index out of range");
  }
  LeviSubset levi{rs, subset, {}};
  std::set<int> remaining(subset.begin(), subset.end());
  while (!remaining.empty()) {
    std::vector<int> component;
    std::vector<int> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int w : rs.neighbors(v)) {
        if (remaining.erase(w)) stack.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    levi.factors.push_back(identify_component(rs, component));
  }
  return levi;
}

/// Positive roots of the Levi: those supported on the subset.
inline IntMatrix levi_positive_roots(const LeviSubset& levi) {
  IntMatrix out;
  for (const auto& r : levi.ambient.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < levi.ambient.rank() && inside; ++i) {
      if (r[static_cast<std::size_t>(i)] != 0 && !levi.contains(i)) inside = false;
    }
    if (inside) out.push_back(r);
  }
  return out;
}

}  // namespace wdsmooth
