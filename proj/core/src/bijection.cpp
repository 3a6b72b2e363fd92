#include "derange/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace derange {

namespace {

bool all_cycles_nontrivial(const CycleForm& c) {
  return std::all_of(c.cycles.begin(), c.cycles.end(),
                     [](const std::vector<int>& cy) { return cy.size() >= 2; });
}

// (1,2)(3,4)...(n-1,n) as a cycle form: even n, every cycle the i-th adjacent
// transposition. Covers n = 0 (the empty product).
bool is_excluded_derangement_form(const CycleForm& c) {
  if (c.n % 2 != 0) return false;
  if (static_cast<int>(c.cycles.size()) != c.n / 2) return false;
  for (int i = 0; i < c.n / 2; ++i) {
    const auto& cy = c.cycles[static_cast<std::size_t>(i)];
    if (cy.size() != 2 || cy[0] != 2 * i + 1 || cy[1] != 2 * i + 2) {
      return false;
    }
  }
  return true;
}

// (1)(2,3)(4,5)...(n-1,n): odd n, leading fixed point, then adjacent
// transpositions shifted by one.
bool is_excluded_one_fixed_form(const CycleForm& c) {
  if (c.n < 1 || c.n % 2 != 1) return false;
  if (static_cast<int>(c.cycles.size()) != (c.n + 1) / 2) return false;
  if (c.cycles[0] != std::vector<int>{1}) return false;
  for (int i = 1; i <= (c.n - 1) / 2; ++i) {
    const auto& cy = c.cycles[static_cast<std::size_t>(i)];
    if (cy.size() != 2 || cy[0] != 2 * i || cy[1] != 2 * i + 1) {
      return false;
    }
  }
  return true;
}

CycleForm checked_canonical(const CycleForm& c) {
  validate_cycle_form(c);
  CycleForm copy = c;
  canonicalize(copy);
  return copy;
}

}  // namespace

const char* map_case_name(MapCase c) {
  switch (c) {
    case MapCase::I: return "i";
    case MapCase::II: return "ii";
    case MapCase::Excluded: return "excluded";
  }
  return "?";
}

int prefix_k(const CycleForm& c) {
  int k = 0;
  for (const auto& cycle : c.cycles) {
    if (cycle.size() != 2 || cycle[0] != 2 * k + 1 || cycle[1] != 2 * k + 2) {
      break;
    }
    ++k;
  }
  return k;
}

BijectionCase classify_case(const CycleForm& c) {
  if (!all_cycles_nontrivial(c)) {
    throw DomainError(Errc::NotADerangement, "input has a fixed point");
  }
  if (is_excluded_derangement_form(c)) {
    return BijectionCase{MapCase::Excluded, 0, 0};
  }
  const int k = prefix_k(c);
  // elements 1..2k fill the first k cycles, so the next cycle opens at 2k+1
  const auto& cy = c.cycles[static_cast<std::size_t>(k)];
  if (cy.front() != 2 * k + 1) {
    throw std::logic_error("cycle after prefix does not open at 2k+1");
  }
  const MapCase variant = cy.size() >= 3 ? MapCase::I : MapCase::II;
  return BijectionCase{variant, k, cy[1]};
}

CycleForm psi(const CycleForm& input) {
  const CycleForm c = checked_canonical(input);
  if (!all_cycles_nontrivial(c)) {
    throw DomainError(Errc::NotADerangement, "input has a fixed point");
  }
  if (is_excluded_derangement_form(c)) {
    throw DomainError(Errc::ExcludedInput,
                      "the involution (1,2)(3,4)...(n-1,n) has no image");
  }

  const BijectionCase bc = classify_case(c);
  const int k = bc.k;
  if (2 * k >= c.n) {
    throw std::logic_error("prefix length reached n/2 on a non-excluded input");
  }

  CycleForm out;
  out.n = c.n;
  std::size_t consumed = 0;  // leading cycles replaced by the rewrite

  if (bc.variant == MapCase::I) {
    const auto& head = c.cycles[static_cast<std::size_t>(k)];
    if (k == 0) {
      // (1,a1,a2,..,aj) -> (a1)(1,a2,..,aj)
      out.cycles.push_back({bc.a1});
      std::vector<int> rest{1};
      rest.insert(rest.end(), head.begin() + 2, head.end());
      out.cycles.push_back(std::move(rest));
    } else {
      // (1,2)..(2k-1,2k)(2k+1,a1,..,aj)
      //   -> (1)(2,3)..(2k-2,2k-1)(2k,a1)(2k+1,a2,..,aj)
      out.cycles.push_back({1});
      for (int i = 1; i < k; ++i) {
        out.cycles.push_back({2 * i, 2 * i + 1});
      }
      out.cycles.push_back({2 * k, bc.a1});
      std::vector<int> rest{2 * k + 1};
      rest.insert(rest.end(), head.begin() + 2, head.end());
      out.cycles.push_back(std::move(rest));
    }
    consumed = static_cast<std::size_t>(k) + 1;
  } else {
    // (1,2)..(2k-1,2k)(2k+1,a1)(2k+2,a2,..,aj)
    //   -> (1)(2,3)..(2k,2k+1)(2k+2,a1,a2,..,aj)
    if (static_cast<std::size_t>(k) + 1 >= c.cycles.size()) {
      throw std::logic_error("2-cycle (2k+1,a1) has no successor cycle");
    }
    const auto& succ = c.cycles[static_cast<std::size_t>(k) + 1];
    if (succ.front() != 2 * k + 2) {
      throw std::logic_error("successor cycle does not open at 2k+2");
    }
    if (bc.a1 < 2 * k + 3) {
      throw std::logic_error("a1 < 2k+3 contradicts prefix maximality");
    }
    out.cycles.push_back({1});
    for (int i = 1; i <= k; ++i) {
      out.cycles.push_back({2 * i, 2 * i + 1});
    }
    std::vector<int> merged{2 * k + 2, bc.a1};
    merged.insert(merged.end(), succ.begin() + 1, succ.end());
    out.cycles.push_back(std::move(merged));
    consumed = static_cast<std::size_t>(k) + 2;
  }

  for (std::size_t i = consumed; i < c.cycles.size(); ++i) {
    out.cycles.push_back(c.cycles[i]);
  }
  canonicalize(out);
  return out;
}

CycleForm psi_inverse(const CycleForm& input) {
  const CycleForm c = checked_canonical(input);

  int fixed_count = 0;
  int ell = 0;
  for (const auto& cycle : c.cycles) {
    if (cycle.size() == 1) {
      ++fixed_count;
      ell = cycle[0];
    }
  }
  if (fixed_count != 1) {
    throw DomainError(Errc::NotExactlyOneFixedPoint,
                      "input has " + std::to_string(fixed_count) +
                          " fixed points, need exactly 1");
  }
  if (is_excluded_one_fixed_form(c)) {
    throw DomainError(Errc::ExcludedInput,
                      "(1)(2,3)...(n-1,n) has no preimage");
  }

  CycleForm out;
  out.n = c.n;

  if (ell != 1) {
    // (l)(1,a2,..,aj)... -> (1,l,a2,..,aj)...
    const auto& head = c.cycles.front();
    if (head.front() != 1) {
      throw std::logic_error("canonical form does not open with 1's cycle");
    }
    std::vector<int> merged{1, ell};
    merged.insert(merged.end(), head.begin() + 1, head.end());
    out.cycles.push_back(std::move(merged));
    for (std::size_t i = 1; i < c.cycles.size(); ++i) {
      if (c.cycles[i].size() == 1) continue;  // drop (l)
      out.cycles.push_back(c.cycles[i]);
    }
    canonicalize(out);
    return out;
  }

  // Fixed point is 1: peel it off, shift everything down one, map the smaller
  // derangement, shift back up and close the new fixed point into (1,m).
  CycleForm inner;
  inner.n = c.n - 1;
  for (std::size_t i = 1; i < c.cycles.size(); ++i) {
    std::vector<int> shifted;
    shifted.reserve(c.cycles[i].size());
    for (int e : c.cycles[i]) shifted.push_back(e - 1);
    inner.cycles.push_back(std::move(shifted));
  }
  // order-preserving relabeling keeps the form canonical
  if (is_excluded_derangement_form(inner)) {
    throw std::logic_error(
        "inner map received the excluded involution; the exclusion check "
        "should have caught this input");
  }
  const CycleForm mapped = psi(inner);

  int m = 0;
  for (const auto& cycle : mapped.cycles) {
    if (cycle.size() == 1) {
      m = cycle[0] + 1;
      out.cycles.push_back({1, m});
    } else {
      std::vector<int> lifted;
      lifted.reserve(cycle.size());
      for (int e : cycle) lifted.push_back(e + 1);
      out.cycles.push_back(std::move(lifted));
    }
  }
  if (m == 0) {
    throw std::logic_error("inner map produced no fixed point");
  }
  canonicalize(out);
  return out;
}

}  // namespace derange
