#pragma once

// Weighted Dynkin diagrams of distinguished nilpotent orbits that are not
// computed from partitions. Rows are stored in the layout they are usually
// printed in (a horizontal chain plus the node drawn above the branch
// point) and converted to Bourbaki numbering on access.

#include <map>
#include <string>
#include <vector>

#include "wdsmooth/rootsys.hpp"

namespace wdsmooth::tables {

inline constexpr const char* kCarterExceptional = "Carter, Finite Groups of Lie Type (1985), p. 176";
inline constexpr const char* kCarterClassical = "Carter, Finite Groups of Lie Type (1985), pp. 174-175";

struct PrintedRow {
  std::string label;
  IntVec chain;  // left to right as printed
  int branch;    // label of the node drawn above the branch point
};

struct TableRow {
  std::string label;
  IntVec labels;  // Bourbaki numbering of the factor's simple roots
  std::string provenance;
};

// E6 printed chain is (1,3,4,5,6), the upper node is 2.
inline const std::vector<PrintedRow>& e6_printed() {
  static const std::vector<PrintedRow> rows = {
      {"E6", {2, 2, 2, 2, 2}, 2},
      {"E6(a1)", {2, 2, 0, 2, 2}, 2},
      {"E6(a3)", {2, 0, 2, 0, 2}, 0},
  };
  return rows;
}

// E7 printed chain is (7,6,5,4,3,1), the upper node is 2.
inline const std::vector<PrintedRow>& e7_printed() {
  static const std::vector<PrintedRow> rows = {
      {"E7", {2, 2, 2, 2, 2, 2}, 2},
      {"E7(a1)", {2, 2, 2, 0, 2, 2}, 2},
      {"E7(a2)", {2, 0, 2, 0, 2, 2}, 2},
      {"E7(a3)", {2, 2, 0, 2, 0, 2}, 0},
      {"E7(a4)", {2, 0, 0, 2, 0, 2}, 0},
      {"E7(a5)", {2, 0, 0, 2, 0, 0}, 0},
  };
  return rows;
}

// D_n printed chain is (1, ..., n-1), the upper node is n (attached to n-2).
struct PrintedDRow {
  int rank;
  IntVec chain;
  int branch;
};

inline const std::vector<PrintedDRow>& dn_printed() {
  static const std::vector<PrintedDRow> rows = {
      {4, {2, 0, 2}, 2},
      {4, {2, 2, 2}, 2},
      {5, {2, 2, 0, 2}, 2},
      {5, {2, 2, 2, 2}, 2},
      {6, {2, 0, 2, 0, 2}, 2},
      {6, {2, 2, 2, 0, 2}, 2},
      {6, {2, 2, 2, 2, 2}, 2},
      {7, {2, 2, 0, 2, 0, 2}, 2},
      {7, {2, 2, 2, 2, 0, 2}, 2},
      {7, {2, 2, 2, 2, 2, 2}, 2},
  };
  return rows;
}

inline IntVec bourbaki_e6(const PrintedRow& r) {
  IntVec out(6, 0);
  const int order[] = {0, 2, 3, 4, 5};
  for (int k = 0; k < 5; ++k) out[static_cast<std::size_t>(order[k])] = r.chain[static_cast<std::size_t>(k)];
  out[1] = r.branch;
  return out;
}

inline IntVec bourbaki_e7(const PrintedRow& r) {
  IntVec out(7, 0);
  const int order[] = {6, 5, 4, 3, 2, 0};
  for (int k = 0; k < 6; ++k) out[static_cast<std::size_t>(order[k])] = r.chain[static_cast<std::size_t>(k)];
  out[1] = r.branch;
  return out;
}

inline IntVec bourbaki_dn(const PrintedDRow& r) {
  IntVec out = r.chain;
  out.push_back(r.branch);
  return out;
}

inline std::vector<TableRow> exceptional_table(int rank) {
  std::vector<TableRow> out;
  if (rank == 6) {
    for (const auto& r : e6_printed()) out.push_back({r.label, bourbaki_e6(r), kCarterExceptional});
  } else if (rank == 7) {
    for (const auto& r : e7_printed()) out.push_back({r.label, bourbaki_e7(r), kCarterExceptional});
  }
  return out;
}

/// Printed D_n rows for one rank, in Bourbaki numbering.
inline std::vector<IntVec> dn_rows(int rank) {
  std::vector<IntVec> out;
  for (const auto& r : dn_printed()) {
    if (r.rank == rank) out.push_back(bourbaki_dn(r));
  }
  return out;
}

/// Distinguished diagrams of the non-type-A Levi factors of F4. The printed
/// rows number F4 from the short end; `labels` maps Bourbaki F4 indices
/// (0-based, long roots 0 and 1) to the diagram value.
struct F4LeviRow {
  std::string label;
  IntVec printed;  // -1 marks a node outside the Levi
  std::map<int, int> labels;
  std::string provenance;
};

inline const std::vector<F4LeviRow>& f4_levi_table() {
  static const std::vector<F4LeviRow> rows = [] {
    std::vector<F4LeviRow> r = {
        {"C2", {-1, 2, 2, -1}, {}, kCarterClassical},
        {"C3", {2, 2, 2, -1}, {}, kCarterClassical},
        {"C3(a1)", {2, 0, 2, -1}, {}, kCarterClassical},
        {"B3", {-1, 2, 2, 2}, {}, kCarterClassical},
    };
    for (auto& row : r) {
      for (int k = 0; k < 4; ++k) {
        int v = row.printed[static_cast<std::size_t>(k)];
        if (v >= 0) row.labels[3 - k] = v;
      }
    }
    return r;
  }();
  return rows;
}

}  // namespace wdsmooth::tables
