// Decides membership of two polynomials in <f1, f2, f3> and prints the
// certificates. Run from the build tree: ./demo/detach_demo
#include <iostream>

#include "detachgb/detachgb.hpp"

using namespace detachgb;

int main() {
  auto ring = make_ring<Rational>({"x", "y", "z", "t"}, TermOrder::grevlex);
  std::vector<Polynomial<Rational>> F = {
      parse_poly("y*z^3 - x^2*t^2", ring),
      parse_poly("x*z^2 - y^2*t", ring),
      parse_poly("x^2*y - z^2*t", ring),
  };

  auto prep = prepare(F);
  std::cout << "reduced basis with representations:\n";
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    std::cout << "  " << prep.reduced[i] << "  <-  " << prep.reps[i] << "\n";

  for (const char* text : {"x*z^6*t - x^5*z*t^2 + x", "x^6*y*t^2 - x*y*z^2*t^5 - x*z^6*t + x^5*z*t^2"}) {
    auto f = parse_poly(text, ring);
    auto res = detach(f, prep);
    std::cout << f << "\n";
    if (res.member)
      std::cout << "  member, cofactors " << *res.cofactors << "\n";
    else
      std::cout << "  not a member, remainder " << res.remainder << "\n";
  }
}
