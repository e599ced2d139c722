// Builds a few named graphs at m edges and prints their certified spectral radii
// next to sqrt(m - 1) and sqrt(m - 2).

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "specturan/bounds.hpp"
#include "specturan/families.hpp"
#include "specturan/graph6.hpp"
#include "specturan/spectral.hpp"

int main(int argc, char** argv) {
  using namespace specturan;
  const std::int64_t m = argc > 1 ? std::atoll(argv[1]) : 51;
  const std::vector<family_spec> specs = {
      family_spec::star(m),          family_spec::snk(m, 1),       family_spec::snk(m - 1, 2),
      family_spec::c5_star_dot(m),   family_spec::g10(m),          family_spec::g11_candidate(m),
      family_spec::g12_candidate(m), family_spec::sm_e(m),
  };
  std::cout << std::fixed << std::setprecision(10);
  std::cout << "sqrt(m-1) = " << bound::nosal_like(m).value() << "\n";
  std::cout << "sqrt(m-2) = " << bound::sqrt_m_minus(m, 2).value() << "\n\n";
  for (const auto& s : specs) {
    const auto g = build<4>(s);
    const auto sp = spectral_radius(g);
    std::cout << std::left << std::setw(22) << s.to_string() << " n=" << std::setw(4) << g.order()
              << " rho in (" << sp.lo() << ", " << sp.hi() << "]\n";
  }
}
