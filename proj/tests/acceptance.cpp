// One line per acceptance criterion; exit status is nonzero if any selected row fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "mcg/verify.hpp"

int main(int argc, char** argv) {
  auto all = mcg::verify::criteria();
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(all.size()); ++i) selected.push_back(i);

  bool ok = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(all.size())) {
      std::cerr << "no criterion " << id << '\n';
      return 2;
    }
    auto r = all[static_cast<std::size_t>(id - 1)]();
    std::cout << mcg::verify::format_row(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
