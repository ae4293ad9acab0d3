#include "dituran/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dituran/constructions.hpp"
#include "dituran/errors.hpp"

namespace dituran {
namespace {

using i64 = std::int64_t;

void require_args(int n, int k) {
  if (n < 0 || k < 1) throw InvalidParameters("need n >= 0 and k >= 1");
}

i64 exact_div(i64 num, i64 den) {
  if (num % den != 0) throw std::logic_error("non-integral formula value " + std::to_string(num) + "/" + std::to_string(den));
  return num / den;
}

TuranValue all_n(i64 v) { return TuranValue{v, Validity::AllN, 0, 0, v, v, ""}; }

i64 turan_edges(i64 n, i64 k) {
  i64 r = n % k;
  return exact_div((k - 1) * n * n - r * (k - r), 2 * k);
}

// Bipartite C4-free values from the exhaustive search, n = 1..7.
constexpr std::array<i64, 8> kZarankiewicz{0, 1, 3, 6, 9, 12, 16, 21};

}  // namespace

std::string to_string(Validity v) {
  switch (v) {
    case Validity::AllN: return "all-n";
    case Validity::LargeN: return "large-n";
    case Validity::Range: return "range";
    case Validity::LowerBoundOnly: return "lower-bound-only";
    case Validity::Unknown: return "unknown";
  }
  return "?";
}

TuranValue ex_clique(int n, int k) {
  require_args(n, k);
  return all_n(turan_edges(n, k));
}

TuranValue ex_path(int n, int k) {
  require_args(n, k);
  i64 r = n % k;
  return all_n(exact_div(i64{k - 1} * n - r * (k - r), 2));
}

TuranValue ex_dipath(int n, int k) {
  require_args(n, k);
  if (k == 1) return all_n(0);
  if (k == 2) {
    if (n <= 2) return all_n(i64{n} * (n - 1));
    return all_n(i64{n} * n / 4);
  }
  if (n <= k) {
    i64 v = i64{n} * (n - 1);
    return TuranValue{v, Validity::Range, 0, k, v, v, "complete digraph"};
  }
  i64 t = turan_edges(n, k);
  if (n <= 2 * k - 1) {
    i64 v = std::max(t, i64{k - 1} * (n - 1));
    return TuranValue{v, Validity::LowerBoundOnly, 0, 0, v, cor7_upper_bound(n, k),
                      "constructions give a lower bound only for k+1 <= n <= 2k-1"};
  }
  return TuranValue{t, Validity::LargeN, 0, 0, t, cor7_upper_bound(n, k), "proved for large n only (unspecified n0)"};
}

TuranValue ex_dicycle(int n, int k) {
  require_args(n, k);
  if (k == 1) return all_n(i64{n} * (n - 1) / 2);
  if (k == 2) return all_n(2 * turan_edges(n, 2));
  i64 r = n % k;
  return all_n(exact_div(i64{n} * n + i64{k - 2} * n - r * (k - r), 2));
}

TuranValue ex_complete_digraph(int n, int k) {
  require_args(n, k);
  return all_n(i64{n} * (n - 1) / 2 + turan_edges(n, k));
}

TuranValue ex_tournament(int n, int k) {
  require_args(n, k);
  return all_n(2 * turan_edges(n, k));
}

std::int64_t ex_c4_small(int n) {
  static constexpr std::array<i64, 9> kValues{0, 0, 1, 3, 4, 6, 7, 9, 11};
  if (n < 0 || n > 8) throw InvalidParameters("ex(n, C4) is tabulated for n <= 8");
  return kValues[n];
}

TuranValue ex_p13(int n) {
  if (n < 0) throw InvalidParameters("need n >= 0");
  if (n <= 8) return all_n(2 * ex_c4_small(n));
  return all_n(i64{n} * n / 3);
}

TuranValue ex_k22_orientation(int n) {
  if (n < 0) throw InvalidParameters("need n >= 0");
  if (n <= 2) return all_n(i64{n} * (n - 1));
  if (n < static_cast<int>(kZarankiewicz.size())) return all_n(kZarankiewicz[n]);
  for (int q = 2; q * q + q + 1 <= n; ++q)
    if (is_prime(q) && q * q + q + 1 == n) return all_n(i64{n} * (q + 1));
  // Lower: the largest prime plane that fits (extra vertices isolated).
  i64 lower = kZarankiewicz.back();
  for (int q = 2; q * q + q + 1 <= n; ++q)
    if (is_prime(q)) lower = std::max(lower, i64{q * q + q + 1} * (q + 1));
  // Upper: largest u with 2u <= n + n sqrt(4n - 3).
  i64 upper = n;
  auto fits = [&](i64 u) {
    i64 lhs = 2 * u - n;
    return lhs <= 0 || lhs * lhs <= i64{n} * n * (4 * i64{n} - 3);
  };
  while (fits(upper + 1)) ++upper;
  upper = std::min(upper, i64{n} * n);
  return TuranValue{0, Validity::Unknown, 0, 0, lower, upper, "open problem; bounds only"};
}

std::int64_t hamilton_threshold(int n) {
  if (n < 2) throw InvalidParameters("need n >= 2");
  return i64{n} * n - 2 * i64{n} + 2;
}

std::int64_t cor7_upper_bound(int n, int k) { return ex_clique(n, k).value + ex_path(n, k).value; }

}  // namespace dituran
