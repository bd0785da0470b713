// Verdicts for every component of S_{GL4} at q = 4, l = 11.

#include <iostream>

#include "wdsmooth/classifier.hpp"

int main() {
  using namespace wdsmooth;
  RootSystem rs = build_root_system(parse_group("GL4"));
  QContext ctx(4, 11);
  for (const auto& o : classical_orbits(rs)) {
    SmoothnessVerdict v = classify_component(rs, o, ctx);
    std::cout << o.to_string() << "\t" << to_string(v.status);
    for (Reason r : v.reasons) std::cout << " " << to_string(r);
    std::cout << "\n";
  }
}
