#pragma once

#include <cstddef>
#include <string_view>

namespace comkit {

// Bounds on brute-force enumerations. Exceeding one raises GuardError.
struct Limits {
  // Largest |E| for which {+,0,-}^E (or a power set of E) may be enumerated.
  std::size_t max_elements = 15;
  // Largest number of ranking extensions enumerated for one poset.
  std::size_t max_rankings = 1'000'000;
  // Largest hypercube dimension searched by the amalgam path condition.
  std::size_t max_path_elements = 20;
};

// Throws GuardError when n exceeds limits.max_elements.
void require_enumerable(std::size_t n, const Limits& limits, std::string_view what);

}  // namespace comkit
