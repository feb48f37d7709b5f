// Builds one permutation from each construction family and prints its
// verdict.

#include <iostream>

#include "apcrucial/apcrucial.hpp"

int main() {
  using namespace apcrucial;
  auto show = [](const char* name, const Permutation& p, int k, int l) {
    std::cout << name << " (" << k << "," << l << ") n=" << p.size() << ": " << format_notation(p) << "  ["
              << to_string(classify(p, k, l).kind) << "]\n";
  };
  show("crucial-3l", construct_crucial_3l(5), 3, 5);
  show("crucial-4l", construct_crucial_4l(6), 4, 6);
  show("figure1", construct_figure1(5, 6, 26), 5, 6);
  show("crucial (k>l)", construct_crucial(6, 5, 30), 6, 5);
  const auto w = parse_notation("216453");
  show("double-odd", double_odd(w, anti_monotone_33(7), 3, 3), 3, 3);
  show("double-even", double_even(w, anti_monotone_33(6), 3, 3), 3, 3);
  show("make-bicrucial", make_bicrucial(w, 3, 3), 3, 3);
  show("bicrucial-3l", construct_bicrucial_3l(7), 3, 7);
  show("extend-bicrucial-odd", extend_bicrucial_odd(parse_notation("73418562"), anti_monotone_33(9), 3, 3), 3, 3);
}
