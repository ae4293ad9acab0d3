// Prints the body of src/c4_catalog_data.inc from the exhaustive search.
#include <iostream>

#include "dituran/search.hpp"

int main() {
  using namespace dituran;
  auto c4 = Pattern::undirected_cycle(4);
  std::cout << "// generated by tools/gen_c4_catalog\n";
  for (int n = 1; n <= 8; ++n) {
    auto r = search_ex_graph(n, c4);
    if (!r.complete) return 1;
    for (const auto& c : r.extremal_set) {
      const auto& g = std::get<SimpleGraph>(c.representative);
      std::cout << "{" << n << ", {";
      bool first = true;
      for (auto [u, v] : g.edges()) {
        std::cout << (first ? "" : ", ") << "{" << u << ", " << v << "}";
        first = false;
      }
      std::cout << "}},\n";
    }
  }
}
