// Walks through the library on two small binary codes.

#include <iostream>

#include "udcodes/udcodes.hpp"

int main() {
  using namespace udcodes;
  const Alphabet binary("01");

  const auto prefix = make_code({"0", "10", "11"}, binary);
  const auto ambiguous = make_code({"0", "01", "10"}, binary);

  for (const auto* code : {&prefix, &ambiguous}) {
    const auto verdict = is_ud(*code);
    std::cout << render(*code) << ": K = " << kraft_sum(*code).to_string();
    if (verdict.is_ud) {
      std::cout << ", uniquely decipherable\n";
    } else {
      const auto& [a, b] = *verdict.witness;
      std::cout << ", ambiguous: " << render(a.concatenation(), binary) << " = "
                << render(a, binary) << " = " << render(b, binary) << "\n";
    }
  }

  const auto square = code_power(ambiguous, 2);
  std::cout << "K(C^2) = " << kraft_sum(square).to_string() << " < K(C)^2 = "
            << kraft_power(kraft_sum(ambiguous), 2).to_string() << "\n";

  std::cout << "irredundant refinements of {0011}:\n";
  for (const auto& d : irredundant_refinements(make_code({"0011"}, binary))) {
    std::cout << "  " << render(d) << "  K = " << kraft_sum(d).to_string() << "\n";
  }
}
