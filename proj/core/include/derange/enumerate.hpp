#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "derange/permutation.hpp"

namespace derange {

using BigInt = boost::multiprecision::cpp_int;

// Exhaustive enumeration is kept at desk scale: the default sweeps 9! =
// 362,880 permutations per class; 12 is the hard ceiling (12! ~ 4.8e8, and
// one-line forms still pack into 64-bit keys).
inline constexpr int kDefaultEnumerationBound = 9;
inline constexpr int kMaxEnumerationBound = 12;

// Streams the members of one class in lexicographic one-line order, each
// exactly once, without materializing S_n. Optionally restricted to
// permutations with a given image of 1 (the sharding hook). Single consumer;
// independent streams may run concurrently.
class ClassStream {
public:
  ClassStream(int n, PermClass cls);
  ClassStream(int n, PermClass cls, int first_image);

  std::optional<Permutation> next();

private:
  bool advance();

  PermClass cls_;
  int first_image_ = 0;  // 0 = unrestricted
  std::vector<int> current_;
  bool fresh_ = true;
  bool exhausted_ = false;
};

std::vector<Permutation> collect_class(int n, PermClass cls);

// d_0..d_max by d_n = n*d_{n-1} + (-1)^n, d_0 = 1.
std::vector<BigInt> count_d_rec1(int n_max);

// d_0..d_max by d_n = (n-1)(d_{n-1} + d_{n-2}), d_0 = 1, d_1 = 0.
std::vector<BigInt> count_d_rec2(int n_max);

// Cardinality of a class by full enumeration and filtering.
// Throws DomainError(BoundExceeded) when n > bound.
std::uint64_t count_class_bruteforce(int n, PermClass cls,
                                     int bound = kDefaultEnumerationBound);

// Per-n counts with cross-method agreement. The recurrence side is always
// present (exact big integers); brute-force columns are filled only when an
// enumeration was run.
struct CountRecord {
  int n = 0;
  BigInt d_n;      // recurrence 1
  BigInt d_rec2;   // recurrence 2
  BigInt f_n;      // n * d_{n-1} (0 for n = 0)
  BigInt dstar_n;  // d_n minus the excluded involution for even n
  BigInt fstar_n;  // f_n minus the excluded element for odd n

  std::optional<std::uint64_t> d_brute;
  std::optional<std::uint64_t> f_brute;
  std::optional<std::uint64_t> dstar_brute;
  std::optional<std::uint64_t> fstar_brute;

  bool rec_agree = false;                 // d_n == d_rec2
  std::optional<bool> brute_agree;        // set iff brute columns are present

  bool consistent() const;  // every method present agrees, and dstar == fstar

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

// Recurrence side only.
CountRecord count_record(int n);

// Installs brute-force counts and recomputes brute_agree.
void set_brute_counts(CountRecord& record, std::uint64_t d, std::uint64_t f,
                      std::uint64_t dstar, std::uint64_t fstar);

// Records for n = 0..max_n; rows with n <= bound carry brute-force columns.
std::vector<CountRecord> count_table(int max_n,
                                     int bound = kDefaultEnumerationBound);

}  // namespace derange
