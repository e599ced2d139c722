// Exhaustive search for the C4+-free graph with m edges of largest spectral radius.

#include <cstdlib>
#include <iostream>

#include "specturan/bounds.hpp"
#include "specturan/enumerate.hpp"

int main(int argc, char** argv) {
  using namespace specturan;
  const std::size_t m = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 9;
  enum_options opt;
  opt.threads = 2;
  const auto r = extremal_rho({m, c4_plus_free}, opt);
  std::cout << r.count << " classes with " << m << " edges\n";
  for (const auto& e : r.extremal)
    std::cout << "extremal " << e.graph.cert << "  rho = " << e.spectrum.rho << "\n";
  for (const auto& e : r.runners_up) std::cout << "next     " << e.graph.cert << "  rho = " << e.spectrum.rho << "\n";
  if (m % 2 == 1) std::cout << "(1 + sqrt(4m - 3)) / 2 = " << bound::golden43(static_cast<std::int64_t>(m)).value() << "\n";
}
