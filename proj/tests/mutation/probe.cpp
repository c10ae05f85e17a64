// Built against a deliberately broken library. Exits 0 when the identity
// suite notices the breakage, 1 when every identity still passes.

#include <exception>
#include <iostream>

#include "evenrhythm/oracle.hpp"

int main() {
  try {
    const auto report = evenrhythm::oracle::verify_identities(7);
    int caught = 0;
    for (const auto& r : report.results) {
      if (r.passed()) continue;
      ++caught;
      std::cout << MUTANT_NAME << ": caught by '" << r.name << "' (" << r.failures << " failures), first "
                << r.first_witness << '\n';
    }
    if (caught > 0) return 0;
    std::cout << MUTANT_NAME << ": survived the identity suite\n";
    return 1;
  } catch (const std::exception& e) {
    // The suite records failures as data, so escaping here still means it broke.
    std::cout << MUTANT_NAME << ": suite aborted: " << e.what() << '\n';
    return 0;
  }
}
