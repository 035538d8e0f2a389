// Walks the positive Hopf link and a virtual relative through the library.

#include <iostream>

#include "linkq/linkq.hpp"

int main() {
  using namespace linkq;

  for (const char* code : {"O1+ U2+ / U1+ O2+", "O1+ / U1+"}) {
    const LinkDiagram d = parse(code);
    const LinkingMatrix m = linking_matrix(d);
    std::cout << code << "\n  linking rows:";
    for (const auto& row : m.rows()) {
      std::cout << " [";
      for (auto x : row) std::cout << ' ' << x;
      std::cout << " ]";
    }
    std::cout << "\n  classical-consistent: " << std::boolalpha
              << is_classical_consistent(m) << '\n';

    const LinkFamily lf = family_from_linking(m);
    for (std::size_t b = 0; b < lf.family.m; ++b) {
      const auto idx = index(lf.family.subgroups[b]);
      std::cout << "  orbit " << b + 1 << ": "
                << (idx ? idx->str() : std::string("infinite")) << '\n';
    }

    for (std::size_t n = 2; n <= 4; ++n)
      std::cout << "  colorings by X_" << n << ": "
                << count_homs_tc_fixedpoint(m, xn(n)) << '\n';
    std::cout << "  " << render(nilpotent3(m)) << "\n\n";
  }

  const auto hopf = linking_matrix(parse("O1+ U2+ / U1+ O2+"));
  const auto mirror = linking_matrix(parse("O1- U2- / U1- O2-"));
  const auto cert = tc_isomorphic_classical(hopf, mirror);
  std::cout << "Hopf vs mirror: " << (cert ? "isomorphic" : "distinct");
  if (cert) std::cout << ", sign " << cert->signs[0];
  std::cout << '\n';
}
