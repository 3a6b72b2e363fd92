#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "derange/errors.hpp"

namespace derange {

// A permutation of {1..n} in one-line form: one_line()[i-1] = pi(i).
// All element values are 1-based. The empty permutation (n = 0) is legal;
// it only shows up in counting.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int n);

  // Validates that image is a permutation of {1..n}; throws DomainError
  // (ElementOutOfRange, RepeatedElement) otherwise.
  static Permutation from_one_line(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int apply(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return image_; }

  // Lexicographic one-line order.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

// Cycle decomposition. Canonical form: each cycle starts at its minimum and
// cycles are sorted by increasing first element; fixed points appear as
// explicit 1-cycles. A cycle (c1,...,cm) maps c1->c2, ..., cm->c1.
struct CycleForm {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

enum class PermClass { S, D, F, DStar, FStar };

const char* class_name(PermClass cls);

struct ClassSet {
  bool s = false;
  bool d = false;
  bool f = false;
  bool dstar = false;
  bool fstar = false;

  bool contains(PermClass cls) const;

  friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

// Orbit decomposition; the result is canonical by construction.
CycleForm to_cycle_form(const Permutation& p);

// Accepts any valid cycle decomposition (order and rotation are free).
// Throws DomainError (RepeatedElement, MissingElement, ElementOutOfRange).
Permutation from_cycle_form(const CycleForm& c);

// Checks that the cycles partition {1..n}. Throws the same errors as
// from_cycle_form.
void validate_cycle_form(const CycleForm& c);

// Rotates each cycle to start at its minimum and sorts cycles by first
// element. The permutation it denotes is unchanged.
void canonicalize(CycleForm& c);

// Grammar: perm := cycle+, cycle := "(" INT ("," INT)* ")", integers >= 1,
// whitespace between tokens ignored and also accepted as a separator.
// n is the maximum element seen; every element of {1..n} must appear exactly
// once (fixed points are written as explicit 1-cycles). The result is
// canonical. Throws DomainError (ParseError, RepeatedElement,
// MissingElement).
CycleForm parse_cycles(const std::string& text);

enum class CycleFormat { Canonical, FixedPointFirst };

// Canonical: cycles in canonical order, comma-separated, no whitespace.
// FixedPointFirst: the unique 1-cycle first, remaining cycles in canonical
// order; throws DomainError(NotOneFixedPoint) unless there is exactly one
// fixed point.
std::string format_cycles(const CycleForm& c,
                          CycleFormat mode = CycleFormat::Canonical);

std::vector<int> fixed_points(const Permutation& p);

// The involution (1,2)(3,4)...(n-1,n); exists only for even n (the empty
// permutation for n = 0). This is the one derangement excluded from DStar.
std::optional<Permutation> excluded_derangement(int n);

// (1)(2,3)(4,5)...(n-1,n); exists only for odd n (just "(1)" when n = 1).
// This is the one one-fixed-point permutation excluded from FStar.
std::optional<Permutation> excluded_one_fixed_point(int n);

bool is_excluded_derangement(const Permutation& p);
bool is_excluded_one_fixed_point(const Permutation& p);

bool in_class(const Permutation& p, PermClass cls);

// All applicable tags at once: s always; d/f by fixed-point count; dstar and
// fstar additionally exclude the single patterned element of matching parity.
ClassSet classify(const Permutation& p);

}  // namespace derange
