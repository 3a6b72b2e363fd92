#pragma once

#include <cstdint>
#include <vector>

// Test-side reference implementations. These are deliberately built on
// recursive placement rather than std::next_permutation, so the library and
// the tests can only agree by both being correct.
namespace oracle {

template <typename Emit>
void extend(std::vector<int>& image, std::uint32_t used, int n,
            const Emit& emit) {
  if (static_cast<int>(image.size()) == n) {
    emit(image);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    const std::uint32_t bit = 1u << v;
    if (used & bit) continue;
    image.push_back(v);
    extend(image, used | bit, n, emit);
    image.pop_back();
  }
}

template <typename Emit>
void for_each_permutation(int n, const Emit& emit) {
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(n));
  extend(image, 0, n, emit);
}

inline int fixed_count(const std::vector<int>& image) {
  int fixed = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == static_cast<int>(i) + 1) ++fixed;
  }
  return fixed;
}

// (1,2)(3,4)...(n-1,n) in one-line form; vacuously true for n = 0.
inline bool is_pair_involution(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n % 2 != 0) return false;
  for (int i = 1; i <= n; i += 2) {
    if (image[static_cast<std::size_t>(i) - 1] != i + 1 ||
        image[static_cast<std::size_t>(i)] != i) {
      return false;
    }
  }
  return true;
}

// (1)(2,3)(4,5)...(n-1,n) in one-line form.
inline bool is_one_then_pairs(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n % 2 != 1) return false;
  if (image[0] != 1) return false;
  for (int i = 2; i < n; i += 2) {
    if (image[static_cast<std::size_t>(i) - 1] != i + 1 ||
        image[static_cast<std::size_t>(i)] != i) {
      return false;
    }
  }
  return true;
}

inline std::uint64_t count_derangements(int n) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const std::vector<int>& im) {
    if (fixed_count(im) == 0) ++count;
  });
  return count;
}

inline std::uint64_t count_one_fixed(int n) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const std::vector<int>& im) {
    if (fixed_count(im) == 1) ++count;
  });
  return count;
}

inline std::uint64_t count_dstar(int n) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const std::vector<int>& im) {
    if (fixed_count(im) == 0 && !is_pair_involution(im)) ++count;
  });
  return count;
}

inline std::uint64_t count_fstar(int n) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const std::vector<int>& im) {
    if (fixed_count(im) == 1 && !is_one_then_pairs(im)) ++count;
  });
  return count;
}

}  // namespace oracle
