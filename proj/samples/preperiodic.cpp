// Rational preperiodic points of the polynomial maps of type (d; d-1, 2, d).

#include <iostream>

#include "belyi/belyi.hpp"

int main(int argc, char** argv) {
  using namespace belyi;
  std::vector<int> degrees{3, 4, 6, 8, 9};
  if (argc > 1) {
    degrees.clear();
    for (int i = 1; i < argc; ++i) degrees.push_back(std::stoi(argv[i]));
  }
  for (int d : degrees) {
    try {
      const BelyiMap f = build(CombinatorialType::validate(d, d - 1, 2, d));
      const PreperReport r = preperiodic_set(f);
      std::cout << "d = " << d << "  f = " << render(f.map) << "\n  PrePer = {";
      for (std::size_t i = 0; i < r.preperiodic.size(); ++i) {
        const QPoint& x = r.preperiodic[i];
        std::cout << (i ? ", " : "") << (x.is_infinity() ? std::string("inf") : to_string(x.value()));
      }
      std::cout << "}\n";
    } catch (const Error& e) {
      std::cout << "d = " << d << "  " << e.what() << '\n';
    }
  }
}
