#pragma once

// Nilpotent orbits: partitions for the classical types, named entries for
// the exceptional tables, weighted Dynkin diagrams and the grading they
// induce on the Lie algebra.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wdsmooth/error.hpp"
#include "wdsmooth/rootsys.hpp"
#include "wdsmooth/tables.hpp"

namespace wdsmooth {

struct WeightedDynkinDiagram {
  IntVec labels;  // indexed by simple root (Bourbaki, 0-based)
  bool operator==(const WeightedDynkinDiagram&) const = default;
};

/// Diagram on a Levi subset: ambient simple-root index -> label.
using LeviDiagram = std::map<int, int>;

struct PartitionOrbit {
  IntVec parts;  // weakly decreasing
  bool very_even = false;
  bool operator==(const PartitionOrbit& o) const { return parts == o.parts; }
};

struct NamedOrbit {
  std::string name;
  WeightedDynkinDiagram diagram;
  bool operator==(const NamedOrbit& o) const { return name == o.name; }
};

class OrbitLabel {
 public:
  OrbitLabel() = default;

  static OrbitLabel partition(IntVec parts) {
    if (parts.empty()) throw ValidationError("empty partition");
    for (int p : parts) {
      if (p <= 0) throw ValidationError("partition parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    OrbitLabel o;
    o.value_ = PartitionOrbit{std::move(parts), false};
    return o;
  }

  static OrbitLabel named(std::string name, WeightedDynkinDiagram diagram) {
    OrbitLabel o;
    o.value_ = NamedOrbit{std::move(name), std::move(diagram)};
    return o;
  }

  /// The zero orbit of an exceptional group.
  static OrbitLabel zero(int rank) {
    return named("0", WeightedDynkinDiagram{IntVec(static_cast<std::size_t>(rank), 0)});
  }

  bool is_partition() const { return std::holds_alternative<PartitionOrbit>(value_); }
  const IntVec& parts() const { return std::get<PartitionOrbit>(value_).parts; }
  bool very_even() const { return is_partition() && std::get<PartitionOrbit>(value_).very_even; }
  void set_very_even(bool flag) { std::get<PartitionOrbit>(value_).very_even = flag; }
  const std::string& name() const { return std::get<NamedOrbit>(value_).name; }
  const WeightedDynkinDiagram& stored_diagram() const { return std::get<NamedOrbit>(value_).diagram; }

  std::string to_string() const {
    if (!is_partition()) return name();
    std::string s;
    for (std::size_t i = 0; i < parts().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts()[i]);
    }
    return s;
  }

  bool operator==(const OrbitLabel&) const = default;

 private:
  std::variant<PartitionOrbit, NamedOrbit> value_;
};

// ---------------------------------------------------------------------------
// Partition bookkeeping

/// n such that orbits of the classical type are partitions of n.
inline int partition_size(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C:
    case Family::D: return 2 * t.rank;
    default: throw UnsupportedType("orbits of " + to_string(t) + " are not indexed by partitions");
  }
}

inline std::map<int, int> multiplicities(const IntVec& parts) {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return m;
}

/// Jordan-type constraint: B/D even parts, C odd parts, occur with even multiplicity.
inline bool satisfies_type_constraint(const DynkinType& t, const IntVec& parts) {
  const int constrained_parity = t.family == Family::C ? 1 : 0;
  if (t.family == Family::A) return true;
  for (auto [part, mult] : multiplicities(parts)) {
    if (part % 2 == constrained_parity && mult % 2 != 0) return false;
  }
  return true;
}

inline bool is_very_even(const DynkinType& t, const IntVec& parts) {
  if (t.family != Family::D) return false;
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

/// All partitions of n, lexicographically decreasing.
inline std::vector<IntVec> partitions_of(int n) {
  std::vector<IntVec> out;
  IntVec current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline void validate_orbit(const RootSystem& rs, const OrbitLabel& o) {
  const DynkinType& t = rs.type();
  if (o.is_partition()) {
    if (!is_classical(t)) throw ValidationError("partition label given for exceptional type " + to_string(t));
    int sum = 0;
    for (int p : o.parts()) sum += p;
    if (sum != partition_size(t)) {
      throw ValidationError("partition " + o.to_string() + " does not sum to " +
                            std::to_string(partition_size(t)) + " for " + to_string(t));
    }
    if (!satisfies_type_constraint(t, o.parts())) {
      throw ValidationError("partition " + o.to_string() + " violates the multiplicity rule for " + to_string(t));
    }
  } else if (static_cast<int>(o.stored_diagram().labels.size()) != rs.rank()) {
    throw ValidationError("named orbit " + o.name() + " does not match rank of " + to_string(t));
  }
}

inline bool is_zero_orbit(const OrbitLabel& o) {
  if (o.is_partition()) {
    return std::all_of(o.parts().begin(), o.parts().end(), [](int p) { return p == 1; });
  }
  return o.name() == "0";
}

/// Every nilpotent orbit of a classical type, dominance-compatible order
/// (lexicographically decreasing). Very even D_n classes are listed once and
/// flagged; they split into two orbits.
inline std::vector<OrbitLabel> classical_orbits(const RootSystem& rs) {
  const DynkinType& t = rs.type();
  if (!is_classical(t)) throw UnsupportedType("classical_orbits: " + to_string(t) + " is exceptional");
  std::vector<OrbitLabel> out;
  for (auto& parts : partitions_of(partition_size(t))) {
    if (!satisfies_type_constraint(t, parts)) continue;
    OrbitLabel o = OrbitLabel::partition(parts);
    o.set_very_even(is_very_even(t, parts));
    out.push_back(std::move(o));
  }
  return out;
}

/// Partition rule: A regular only, B/D distinct odd parts, C distinct even parts.
inline bool is_distinguished(const RootSystem& rs, const OrbitLabel& o) {
  if (!o.is_partition()) return o.name() != "0";
  const IntVec& parts = o.parts();
  const DynkinType& t = rs.type();
  if (t.family == Family::A) return parts.size() == 1;
  const int parity = t.family == Family::C ? 0 : 1;
  std::set<int> seen;
  for (int p : parts) {
    if (p % 2 != parity || !seen.insert(p).second) return false;
  }
  return true;
}

/// sl2 weights of the Jordan blocks: p-1, p-3, ..., 1-p for each part p.
inline IntVec sl2_weights(const IntVec& parts) {
  IntVec w;
  for (int p : parts) {
    for (int k = p - 1; k >= 1 - p; k -= 2) w.push_back(k);
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

/// Weighted Dynkin diagram. Classical types: the dominant cocharacter built
/// from the sorted sl2 weights, paired with each simple root. Named orbits
/// return their stored diagram.
inline WeightedDynkinDiagram weighted_dynkin(const RootSystem& rs, const OrbitLabel& o) {
  validate_orbit(rs, o);
  if (!o.is_partition()) return o.stored_diagram();
  const DynkinType& t = rs.type();
  IntVec h = sl2_weights(o.parts());
  const std::size_t coords = t.family == Family::A ? h.size() : static_cast<std::size_t>(t.rank);
  h.resize(coords);
  WeightedDynkinDiagram d;
  for (const IntVec& alpha : rs.simple_roots()) {
    d.labels.push_back(static_cast<int>(detail::dot(alpha, h)));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Tables

struct DistinguishedEntry {
  OrbitLabel orbit;
  WeightedDynkinDiagram diagram;
  std::string provenance;  // empty for computed rows
};

/// Distinguished orbits with their diagrams: computed for classical types of
/// rank <= 8, hardcoded for E6 and E7.
inline std::vector<DistinguishedEntry> distinguished_table(const DynkinType& t) {
  validate(t);
  std::vector<DistinguishedEntry> out;
  if (is_classical(t)) {
    if (t.rank > 8) throw UnsupportedType("distinguished_table: rank above 8");
    RootSystem rs = build_root_system(t);
    for (const auto& o : classical_orbits(rs)) {
      if (is_distinguished(rs, o)) out.push_back({o, weighted_dynkin(rs, o), ""});
    }
    return out;
  }
  if (t.family == Family::E && (t.rank == 6 || t.rank == 7)) {
    for (auto& row : tables::exceptional_table(t.rank)) {
      WeightedDynkinDiagram d{row.labels};
      out.push_back({OrbitLabel::named(row.label, d), d, row.provenance});
    }
    return out;
  }
  throw UnsupportedType("no distinguished-orbit table for " + to_string(t));
}

/// Looks up a named exceptional orbit (case-insensitive) or "0".
inline OrbitLabel find_named_orbit(const DynkinType& t, const std::string& label) {
  auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  if (label == "0") return OrbitLabel::zero(t.rank);
  if (t.family == Family::E && (t.rank == 6 || t.rank == 7)) {
    for (auto& row : tables::exceptional_table(t.rank)) {
      if (lower(row.label) == lower(label)) return OrbitLabel::named(row.label, WeightedDynkinDiagram{row.labels});
    }
  }
  throw UnsupportedType("unknown orbit label '" + label + "' for " + to_string(t));
}

/// Parses "2,1" (partition) or a named label; classical types require partitions.
inline OrbitLabel parse_orbit(const DynkinType& t, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty orbit label");
  const bool numeric = s.find_first_not_of("0123456789,") == std::string::npos;
  if (numeric && (is_classical(t) || s != "0")) {
    IntVec parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw ValidationError("malformed partition '" + text + "'");
      parts.push_back(std::stoi(tok));
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i] > parts[i - 1]) throw ValidationError("partition '" + text + "' is not weakly decreasing");
    }
    return OrbitLabel::partition(parts);
  }
  if (is_classical(t)) throw ValidationError("classical types take partitions, got '" + text + "'");
  return find_named_orbit(t, s);
}

// ---------------------------------------------------------------------------
// Grading

/// dims[i] = dim g(lambda, i).
struct GradingDims {
  std::map<int, int> dims;

  int at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  int total() const {
    int s = 0;
    for (auto [i, d] : dims) s += d;
    return s;
  }
};

inline int pairing(const IntVec& coefficients, const IntVec& labels) {
  int s = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) s += coefficients[i] * labels[i];
  return s;
}

inline GradingDims grading_dims(const RootSystem& rs, const WeightedDynkinDiagram& w) {
  if (static_cast<int>(w.labels.size()) != rs.rank()) {
    throw ValidationError("diagram size does not match rank");
  }
  GradingDims g;
  g.dims[0] = rs.reductive_rank();
  for (const auto& root : rs.positive_roots()) {
    int k = pairing(root, w.labels);
    ++g.dims[k];
    ++g.dims[-k];
  }
  return g;
}

/// r = 1 + max{i : g(lambda, 2i) != 0}.
inline int smooth_bound_r(const GradingDims& g) {
  int best = 0;
  for (auto [i, d] : g.dims) {
    if (d != 0 && i >= 0 && i % 2 == 0) best = std::max(best, i / 2);
  }
  return 1 + best;
}

// ---------------------------------------------------------------------------
// Levi-level checks

inline IntVec levi_labels(const LeviSubset& levi, const LeviDiagram& w) {
  IntVec labels(static_cast<std::size_t>(levi.ambient.rank()), 0);
  for (int i : levi.subset) {
    auto it = w.find(i);
    if (it == w.end()) throw ValidationError("diagram missing a Levi simple root");
    labels[static_cast<std::size_t>(i)] = it->second;
  }
  for (auto [i, v] : w) {
    if (!levi.contains(i)) throw ValidationError("diagram has a label outside the Levi");
  }
  return labels;
}

/// dim g_L(lambda,0) == dim g_L(lambda,2) + dim Z_L.
inline bool check_distinguished_criterion(const LeviSubset& levi, const LeviDiagram& w) {
  const IntVec labels = levi_labels(levi, w);
  int g0 = levi.ambient.reductive_rank();
  int g2 = 0;
  for (const auto& root : levi_positive_roots(levi)) {
    int k = pairing(root, labels);
    if (k == 0) g0 += 2;
    if (k == 2 || k == -2) ++g2;
  }
  const int center = levi.ambient.reductive_rank() - static_cast<int>(levi.subset.size());
  return g0 == g2 + center;
}

inline bool check_distinguished_criterion(const RootSystem& rs, const WeightedDynkinDiagram& w) {
  std::vector<int> all(static_cast<std::size_t>(rs.rank()));
  std::iota(all.begin(), all.end(), 0);
  LeviDiagram d;
  for (int i = 0; i < rs.rank(); ++i) d[i] = w.labels[static_cast<std::size_t>(i)];
  return check_distinguished_criterion(levi_factors(rs, all), d);
}

/// Levi simple roots joined by an ambient edge to a simple root outside the Levi.
inline std::set<int> exposed_roots(const LeviSubset& levi) {
  std::set<int> out;
  for (int i : levi.subset) {
    for (int j : levi.ambient.neighbors(i)) {
      if (!levi.contains(j)) out.insert(i);
    }
  }
  return out;
}

/// Distinguished diagrams of a Levi factor, in the factor's own numbering.
inline std::vector<IntVec> factor_distinguished_diagrams(const LeviFactor& f) {
  std::vector<IntVec> out;
  for (auto& e : distinguished_table(f.type)) out.push_back(e.diagram.labels);
  return out;
}

inline LeviDiagram lift_factor_diagram(const LeviFactor& f, const IntVec& labels) {
  LeviDiagram d;
  for (std::size_t k = 0; k < f.embedding.size(); ++k) d[f.embedding[k]] = labels[k];
  return d;
}

/// True iff every exposed root carries label 2. Each factor's restriction must
/// be one of that factor's distinguished diagrams.
inline bool verify_exposed_weight_two(const LeviSubset& levi, const LeviDiagram& w) {
  const IntVec labels = levi_labels(levi, w);
  for (const auto& f : levi.factors) {
    IntVec restricted;
    for (int i : f.embedding) restricted.push_back(labels[static_cast<std::size_t>(i)]);
    auto table = factor_distinguished_diagrams(f);
    if (std::find(table.begin(), table.end(), restricted) == table.end()) {
      throw ValidationError("factor " + to_string(f.type) + " diagram is not distinguished");
    }
  }
  for (int i : exposed_roots(levi)) {
    if (labels[static_cast<std::size_t>(i)] != 2) return false;
  }
  return true;
}

struct ExposedSweepReport {
  int levis_checked = 0;
  int levis_skipped = 0;  // some factor without a table
  int diagrams_checked = 0;
  std::vector<std::string> violations;
};

/// Every Levi subset of `rs` and every combination of distinguished factor
/// diagrams: exposed roots must carry label 2.
inline ExposedSweepReport exposed_root_sweep(const RootSystem& rs) {
  ExposedSweepReport report;
  const int n = rs.rank();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    LeviSubset levi = levi_factors(rs, subset);
    std::vector<std::vector<IntVec>> choices;
    bool available = true;
    for (const auto& f : levi.factors) {
      try {
        choices.push_back(factor_distinguished_diagrams(f));
      } catch (const UnsupportedType&) {
        available = false;
        break;
      }
    }
    if (!available) {
      ++report.levis_skipped;
      continue;
    }
    ++report.levis_checked;
    std::vector<std::size_t> index(choices.size(), 0);
    while (true) {
      LeviDiagram d;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        for (auto [i, v] : lift_factor_diagram(levi.factors[k], choices[k][index[k]])) d[i] = v;
      }
      ++report.diagrams_checked;
      if (!verify_exposed_weight_two(levi, d)) {
        std::string rec = to_string(rs.type()) + " subset {";
        for (int i : subset) rec += std::to_string(i + 1) + " ";
        report.violations.push_back(rec + "}");
      }
      std::size_t k = 0;
      while (k < index.size() && ++index[k] == choices[k].size()) index[k++] = 0;
      if (k == index.size()) break;
    }
  }
  return report;
}

}  // namespace wdsmooth
