// Tangent lower bound at Phi0 for the subregular component of S_{GL3} over F_11.

#include <iostream>

#include "wdsmooth/certificate.hpp"

int main() {
  using namespace wdsmooth;
  auto spec = std::make_shared<const GroupSpec>(GroupSpec::gl(Fp(11), 3));
  EpsilonCertificate c = epsilon_certificate(spec, {2, 1}, 2);
  std::cout << "q = " << c.q << "\n";
  std::cout << "eps = (" << c.eps0 << ", " << c.eps1 << ", " << c.eps2 << ", " << c.eps3 << ")\n";
  std::cout << "orbit " << c.orbit_dim << " + torus " << c.torus_dim << " + unipotent " << c.unipotent_dim
            << " + N " << c.n_span_dim << " = " << c.lower_bound << " > dim G = " << c.dim_g << "\n";
  std::cout << "dim T_P S_G = " << c.ambient_tangent_dim << "\n";
}
