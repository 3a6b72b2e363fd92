#pragma once

#include "derange/permutation.hpp"

namespace derange {

enum class MapCase { I, II, Excluded };

const char* map_case_name(MapCase c);  // "i", "ii", "excluded"

// Case analysis of a derangement in canonical cycle form. k is the number of
// leading cycles matching (1,2)(3,4)...(2k-1,2k); a1 is the element that
// follows 2k+1 inside its cycle. k and a1 are meaningful for cases I and II
// only; Excluded marks the involution (1,2)(3,4)...(n-1,n).
struct BijectionCase {
  MapCase variant = MapCase::Excluded;
  int k = 0;
  int a1 = 0;

  friend bool operator==(const BijectionCase&, const BijectionCase&) = default;
};

// Largest k such that the canonical cycle form starts with
// (1,2)(3,4)...(2k-1,2k). Zero when the first cycle is not (1,2).
// Precondition: c is a derangement in canonical form.
int prefix_k(const CycleForm& c);

// Case I when the cycle containing 2k+1 has at least 3 elements, case II when
// it is a 2-cycle, Excluded for the full pairwise involution.
// Throws DomainError(NotADerangement) if c has a fixed point.
BijectionCase classify_case(const CycleForm& c);

// Maps a derangement to a permutation with exactly one fixed point, in
// canonical cycle form.
//
//   case I   (1,2)..(2k-1,2k)(2k+1,a1,a2,..,aj)...
//        ->  (1)(2,3)..(2k-2,2k-1)(2k,a1)(2k+1,a2,..,aj)...
//            for k = 0 this degenerates to (1,a1,a2,..,aj)... -> (a1)(1,a2,..,aj)...
//   case II  (1,2)..(2k-1,2k)(2k+1,a1)(2k+2,a2,..,aj)...
//        ->  (1)(2,3)..(2k,2k+1)(2k+2,a1,a2,..,aj)...
//
// The fixed point of the result is 1, except in case I with k = 0 where it
// is a1. Throws DomainError(NotADerangement) or DomainError(ExcludedInput)
// (the latter for (1,2)(3,4)...(n-1,n), even n). Structural invariants (k <
// n/2; in case II the next cycle starts at 2k+2 and a1 >= 2k+3) are checked
// and raise std::logic_error if ever violated.
CycleForm psi(const CycleForm& c);

// Inverse of psi. For fixed point l != 1, splices l into the cycle of 1:
// (l)(1,a2,..,aj)... -> (1,l,a2,..,aj)... . For l = 1, removes the fixed
// point, relabels {2..n} down to {1..n-1}, applies psi, relabels back, and
// replaces the resulting fixed point (m) with the 2-cycle (1,m).
// Throws DomainError(NotExactlyOneFixedPoint) or DomainError(ExcludedInput)
// (the latter for (1)(2,3)...(n-1,n), odd n).
CycleForm psi_inverse(const CycleForm& c);

}  // namespace derange
