// Prints the minimal crucial and bicrucial lengths for small (k, l) next to
// the closed form max(k,l)(min(k,l)-1), plus one witness for each.

#include <iostream>

#include "apcrucial/apcrucial.hpp"

int main() {
  using namespace apcrucial;
  for (auto [k, l] : {std::pair{3, 3}, {3, 4}, {4, 3}, {3, 5}, {4, 4}}) {
    const auto crucial = find_minimal_crucial(k, l);
    std::cout << "(" << k << "," << l << ") m = " << minimal_length_formula(k, l);
    if (crucial.found)
      std::cout << ", crucial at " << *crucial.found << ": " << format_notation(*crucial.records.back().witness);
    if (k + l <= 7) {
      const auto bi = find_minimal_bicrucial(k, l);
      if (bi.found)
        std::cout << ", bicrucial at " << *bi.found << ": " << format_notation(*bi.records.back().witness);
    }
    std::cout << '\n';
  }
}
