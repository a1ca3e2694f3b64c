// Nested commutators at mu = 64 and how their dilatations compare with the bounds.
#include <iostream>

#include "mcg/mcg.hpp"

int main() {
  const std::uint64_t mu = *mcg::thurston_mu(mcg::torelli_family(4));
  std::cout << "mu from the genus 4 torelli family: " << mu << "\n";

  for (const auto& row : mcg::lcs_table(5, mu)) {
    std::cout << "w(" << row.depth << ") length " << row.word_length << "  log lambda " << *row.log_dilatation << "\n";
  }

  auto lower = mcg::torelli_lower();
  std::cout << "torelli lower bound " << lower.value << " (" << lower.binding_case << ")\n";

  auto search = mcg::min_dilatation_search(6, mu, 2);
  std::cout << "shortest minimiser: " << search.all_minima.front().str() << ", log lambda "
            << *search.minimum.log_dilatation << "\n";
}
