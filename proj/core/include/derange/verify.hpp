#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derange/bijection.hpp"
#include "derange/enumerate.hpp"

namespace derange {

inline constexpr int kMaxFailureWitnesses = 20;

struct VerifyFailure {
  std::string input;    // offending element, canonical cycle notation
  std::string context;  // which check rejected it
  std::string actual;   // what was produced

  friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyReport {
  int n = 0;
  bool bijective = false;   // total on DStar, image exactly FStar, no collisions
  bool inverse_ok = false;  // psi_inverse(psi(pi)) == pi and psi(psi_inverse(sigma)) == sigma
  std::uint64_t excluded_count_d = 0;  // elements of D_n classified Excluded
  std::uint64_t excluded_count_f = 0;  // elements of F_n rejected by psi_inverse
  std::uint64_t dstar_count = 0;
  std::uint64_t fstar_count = 0;
  std::uint64_t image_count = 0;  // distinct psi images seen
  CountRecord cardinalities;
  std::vector<VerifyFailure> failures;  // capped at kMaxFailureWitnesses

  bool ok() const { return bijective && inverse_ok; }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// Exhaustively checks one n: psi is total on DStar_n and lands in FStar_n,
// its image has no collisions and equals FStar_n exactly, both inverse laws
// hold, and exactly one element per matching parity is Excluded. Cardinality
// identities are cross-checked against both recurrences in `cardinalities`.
//
// shard_count > 1 fans the sweep out to worker threads, partitioning by the
// image of element 1; the report is identical for every shard_count.
// Throws DomainError(BoundExceeded) when n > bound.
VerifyReport verify_n(int n, int shard_count = 1,
                      int bound = kDefaultEnumerationBound);

// ---- reference tables (n = 4 and n = 5) ----

struct GoldenRow {
  std::string pi;     // "-" for the image row with no preimage, "..." for the
                      // trailing ellipsis column
  std::string image;  // "-" for the excluded derangement
  std::optional<MapCase> tag;
  std::optional<int> k;
  std::optional<int> a1;

  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

// The embedded reference rows: all nine derangements of size 4 and all eight
// published size-5 columns (the last of which is the table's trailing
// ellipsis), in compact single-digit notation.
const std::vector<GoldenRow>& golden_reference();

// The same rows recomputed from each reference input via psi (dash rows via
// the exclusion rules).
std::vector<GoldenRow> golden_tables();

struct GoldenComparison {
  GoldenRow computed;
  GoldenRow reference;
  bool match = false;
};

// Compares golden_tables() against a reference set, normalizing separators.
std::vector<GoldenComparison> golden_compare(
    const std::vector<GoldenRow>& reference);
std::vector<GoldenComparison> golden_compare();

// Strips commas and whitespace so "(1,2)(3,4)" and "(12)(34)" compare equal.
std::string normalize_cycles(const std::string& s);

}  // namespace derange
