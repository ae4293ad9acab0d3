#pragma once

#include <cstdint>
#include <string>

namespace dituran {

// Where a value is proved. LargeN: only for n beyond an unspecified n0.
// Range: exact for range_lo <= n <= range_hi. LowerBoundOnly: a construction
// attains it, the true value may be larger. Unknown: only lower/upper hold.
enum class Validity { AllN, LargeN, Range, LowerBoundOnly, Unknown };

struct TuranValue {
  std::int64_t value = 0;
  Validity validity = Validity::AllN;
  int range_lo = 0;
  int range_hi = 0;
  // Equal to value unless validity is LowerBoundOnly or Unknown.
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::string note;

  bool exact() const { return validity == Validity::AllN || validity == Validity::Range; }
};

std::string to_string(Validity v);

// Throughout, k is the Turan parameter: the forbidden structure has order
// k + 1, and n = qk + r with 0 <= r < k.

// Edges of T_{n,k}.
TuranValue ex_clique(int n, int k);
// Edges of Gamma_{n,k}.
TuranValue ex_path(int n, int k);
TuranValue ex_dipath(int n, int k);
TuranValue ex_dicycle(int n, int k);
TuranValue ex_complete_digraph(int n, int k);
// Any tournament on k + 1 vertices.
TuranValue ex_tournament(int n, int k);
TuranValue ex_p13(int n);
// Anti-directed C4. Known from search for n <= 7 and from projective planes
// of prime order; otherwise Unknown with bounds.
TuranValue ex_k22_orientation(int n);

std::int64_t hamilton_threshold(int n);
std::int64_t cor7_upper_bound(int n, int k);

// Values of ex(n, C4) for n = 1..8.
std::int64_t ex_c4_small(int n);

}  // namespace dituran
