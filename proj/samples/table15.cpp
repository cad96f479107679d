// Reduce the degree-15 polynomial maps (15; 16-e2, e2, 15) modulo 2, 3, 5, 7
// and print one line per (p, e2).

#include <iostream>

#include "belyi/belyi.hpp"

int main() {
  using namespace belyi;
  std::uint64_t last = 0;
  for (const CensusRow& row : census(table_15_jobs())) {
    if (row.p != last) {
      std::cout << "p = " << row.p << '\n';
      last = row.p;
    }
    const ReductionReport& r = *row.report;
    std::cout << "  e2 = " << row.ctype.e2() << "  " << render(r.fbar) << "  (" << to_string(r.classification)
              << (r.is_monomial ? ", monomial" : "") << ")\n";
  }
}
