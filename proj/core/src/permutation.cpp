#include "derange/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace derange {

namespace {

int count_fixed_points(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.apply(i) == i) ++count;
  }
  return count;
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n) {
      throw DomainError(Errc::ElementOutOfRange,
                        "value " + std::to_string(v) + " outside 1.." +
                            std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw DomainError(Errc::RepeatedElement,
                        "value " + std::to_string(v) + " appears twice");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::move(image));
}

const char* class_name(PermClass cls) {
  switch (cls) {
    case PermClass::S: return "s";
    case PermClass::D: return "d";
    case PermClass::F: return "f";
    case PermClass::DStar: return "dstar";
    case PermClass::FStar: return "fstar";
  }
  return "?";
}

bool ClassSet::contains(PermClass cls) const {
  switch (cls) {
    case PermClass::S: return s;
    case PermClass::D: return d;
    case PermClass::F: return f;
    case PermClass::DStar: return dstar;
    case PermClass::FStar: return fstar;
  }
  return false;
}

CycleForm to_cycle_form(const Permutation& p) {
  const int n = p.size();
  CycleForm c;
  c.n = n;
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !visited[static_cast<std::size_t>(i)]; i = p.apply(i)) {
      visited[static_cast<std::size_t>(i)] = 1;
      cycle.push_back(i);
    }
    c.cycles.push_back(std::move(cycle));
  }
  // each orbit is entered at its smallest element and starts are increasing,
  // so the result is already canonical
  return c;
}

void validate_cycle_form(const CycleForm& c) {
  std::vector<char> seen(static_cast<std::size_t>(c.n) + 1, 0);
  int covered = 0;
  for (const auto& cycle : c.cycles) {
    if (cycle.empty()) {
      throw DomainError(Errc::ParseError, "empty cycle");
    }
    for (int e : cycle) {
      if (e < 1 || e > c.n) {
        throw DomainError(Errc::ElementOutOfRange,
                          "element " + std::to_string(e) + " outside 1.." +
                              std::to_string(c.n));
      }
      if (seen[static_cast<std::size_t>(e)]) {
        throw DomainError(Errc::RepeatedElement,
                          "element " + std::to_string(e) + " appears twice");
      }
      seen[static_cast<std::size_t>(e)] = 1;
      ++covered;
    }
  }
  if (covered != c.n) {
    for (int e = 1; e <= c.n; ++e) {
      if (!seen[static_cast<std::size_t>(e)]) {
        throw DomainError(Errc::MissingElement,
                          "element " + std::to_string(e) + " missing");
      }
    }
  }
}

Permutation from_cycle_form(const CycleForm& c) {
  validate_cycle_form(c);
  std::vector<int> image(static_cast<std::size_t>(c.n));
  for (const auto& cycle : c.cycles) {
    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      image[static_cast<std::size_t>(cycle[i]) - 1] = cycle[(i + 1) % m];
    }
  }
  return Permutation::from_one_line(std::move(image));
}

void canonicalize(CycleForm& c) {
  for (auto& cycle : c.cycles) {
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
  }
  std::sort(c.cycles.begin(), c.cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
}

CycleForm parse_cycles(const std::string& text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  const auto at_digit = [&] {
    return i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]));
  };
  const auto parse_int = [&]() -> int {
    if (!at_digit()) {
      throw DomainError(Errc::ParseError,
                        "expected integer at position " + std::to_string(i));
    }
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) {
        throw DomainError(Errc::ParseError, "element too large");
      }
      ++i;
    }
    if (v < 1) {
      throw DomainError(Errc::ParseError, "elements must be >= 1");
    }
    return static_cast<int>(v);
  };

  CycleForm c;
  skip_ws();
  if (i >= text.size()) {
    throw DomainError(Errc::ParseError, "empty input");
  }
  while (i < text.size()) {
    if (text[i] != '(') {
      throw DomainError(Errc::ParseError,
                        "expected '(' at position " + std::to_string(i));
    }
    ++i;
    std::vector<int> cycle;
    skip_ws();
    cycle.push_back(parse_int());
    while (true) {
      skip_ws();
      if (i >= text.size()) {
        throw DomainError(Errc::ParseError, "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        skip_ws();
      }
      cycle.push_back(parse_int());
    }
    c.cycles.push_back(std::move(cycle));
    skip_ws();
  }

  int n = 0;
  for (const auto& cycle : c.cycles) {
    for (int e : cycle) n = std::max(n, e);
  }
  c.n = n;
  validate_cycle_form(c);
  canonicalize(c);
  return c;
}

std::string format_cycles(const CycleForm& c, CycleFormat mode) {
  const auto put = [](std::string& out, const std::vector<int>& cycle) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  };

  std::string out;
  if (mode == CycleFormat::Canonical) {
    for (const auto& cycle : c.cycles) put(out, cycle);
    return out;
  }

  const std::vector<int>* fixed = nullptr;
  int count = 0;
  for (const auto& cycle : c.cycles) {
    if (cycle.size() == 1) {
      fixed = &cycle;
      ++count;
    }
  }
  if (count != 1) {
    throw DomainError(Errc::NotOneFixedPoint,
                      "input has " + std::to_string(count) +
                          " fixed points, need exactly 1");
  }
  put(out, *fixed);
  for (const auto& cycle : c.cycles) {
    if (&cycle != fixed) put(out, cycle);
  }
  return out;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.apply(i) == i) out.push_back(i);
  }
  return out;
}

std::optional<Permutation> excluded_derangement(int n) {
  if (n < 0 || n % 2 != 0) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; i += 2) {
    image[static_cast<std::size_t>(i) - 1] = i + 1;
    image[static_cast<std::size_t>(i)] = i;
  }
  return Permutation::from_one_line(std::move(image));
}

std::optional<Permutation> excluded_one_fixed_point(int n) {
  if (n < 1 || n % 2 != 1) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(n));
  image[0] = 1;
  for (int i = 2; i < n; i += 2) {
    image[static_cast<std::size_t>(i) - 1] = i + 1;
    image[static_cast<std::size_t>(i)] = i;
  }
  return Permutation::from_one_line(std::move(image));
}

bool is_excluded_derangement(const Permutation& p) {
  const int n = p.size();
  if (n % 2 != 0) return false;
  for (int i = 1; i <= n; i += 2) {
    if (p.apply(i) != i + 1 || p.apply(i + 1) != i) return false;
  }
  return true;
}

bool is_excluded_one_fixed_point(const Permutation& p) {
  const int n = p.size();
  if (n < 1 || n % 2 != 1) return false;
  if (p.apply(1) != 1) return false;
  for (int i = 2; i < n; i += 2) {
    if (p.apply(i) != i + 1 || p.apply(i + 1) != i) return false;
  }
  return true;
}

bool in_class(const Permutation& p, PermClass cls) {
  if (cls == PermClass::S) return true;
  const int fp = count_fixed_points(p);
  switch (cls) {
    case PermClass::D:
      return fp == 0;
    case PermClass::F:
      return fp == 1;
    case PermClass::DStar:
      return fp == 0 && !is_excluded_derangement(p);
    case PermClass::FStar:
      return fp == 1 && !is_excluded_one_fixed_point(p);
    default:
      return true;
  }
}

ClassSet classify(const Permutation& p) {
  const int fp = count_fixed_points(p);
  ClassSet set;
  set.s = true;
  set.d = fp == 0;
  set.f = fp == 1;
  set.dstar = set.d && !is_excluded_derangement(p);
  set.fstar = set.f && !is_excluded_one_fixed_point(p);
  return set;
}

}  // namespace derange
