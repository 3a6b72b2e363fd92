#include "derange/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace derange {

ClassStream::ClassStream(int n, PermClass cls) : cls_(cls) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
}

ClassStream::ClassStream(int n, PermClass cls, int first_image)
    : cls_(cls), first_image_(first_image) {
  if (n < 1) throw std::invalid_argument("n must be >= 1 for a fixed first image");
  if (first_image < 1 || first_image > n) {
    throw std::invalid_argument("first_image outside 1..n");
  }
  current_.reserve(static_cast<std::size_t>(n));
  current_.push_back(first_image);
  for (int v = 1; v <= n; ++v) {
    if (v != first_image) current_.push_back(v);
  }
}

bool ClassStream::advance() {
  if (current_.empty()) return false;  // n == 0: single element
  if (first_image_ != 0) {
    return std::next_permutation(current_.begin() + 1, current_.end());
  }
  return std::next_permutation(current_.begin(), current_.end());
}

std::optional<Permutation> ClassStream::next() {
  while (!exhausted_) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      exhausted_ = true;
      break;
    }
    Permutation p = Permutation::from_one_line(current_);
    if (in_class(p, cls_)) return p;
  }
  return std::nullopt;
}

std::vector<Permutation> collect_class(int n, PermClass cls) {
  std::vector<Permutation> out;
  ClassStream stream(n, cls);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<BigInt> count_d_rec1(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<BigInt> d(static_cast<std::size_t>(n_max) + 1);
  d[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    d[static_cast<std::size_t>(n)] =
        BigInt(n) * d[static_cast<std::size_t>(n) - 1] +
        (n % 2 == 0 ? 1 : -1);
  }
  return d;
}

std::vector<BigInt> count_d_rec2(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<BigInt> d(static_cast<std::size_t>(n_max) + 1);
  d[0] = 1;
  if (n_max >= 1) d[1] = 0;
  for (int n = 2; n <= n_max; ++n) {
    d[static_cast<std::size_t>(n)] =
        BigInt(n - 1) * (d[static_cast<std::size_t>(n) - 1] +
                         d[static_cast<std::size_t>(n) - 2]);
  }
  return d;
}

std::uint64_t count_class_bruteforce(int n, PermClass cls, int bound) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (bound > kMaxEnumerationBound) {
    throw std::invalid_argument("bound exceeds the hard enumeration ceiling");
  }
  if (n > bound) {
    throw DomainError(Errc::BoundExceeded,
                      "n = " + std::to_string(n) +
                          " exceeds the enumeration bound " +
                          std::to_string(bound));
  }
  std::uint64_t count = 0;
  ClassStream stream(n, cls);
  while (stream.next()) ++count;
  return count;
}

bool CountRecord::consistent() const {
  if (!rec_agree) return false;
  if (brute_agree.has_value() && !*brute_agree) return false;
  return dstar_n == fstar_n;
}

CountRecord count_record(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto rec1 = count_d_rec1(n);
  const auto rec2 = count_d_rec2(n);
  CountRecord r;
  r.n = n;
  r.d_n = rec1.back();
  r.d_rec2 = rec2.back();
  r.f_n = n >= 1 ? BigInt(n) * rec1[static_cast<std::size_t>(n) - 1] : BigInt(0);
  r.dstar_n = r.d_n - (n % 2 == 0 ? 1 : 0);
  r.fstar_n = r.f_n - (n % 2 == 1 ? 1 : 0);
  r.rec_agree = r.d_n == r.d_rec2;
  return r;
}

void set_brute_counts(CountRecord& record, std::uint64_t d, std::uint64_t f,
                      std::uint64_t dstar, std::uint64_t fstar) {
  record.d_brute = d;
  record.f_brute = f;
  record.dstar_brute = dstar;
  record.fstar_brute = fstar;
  record.brute_agree = record.d_n == BigInt(d) && record.f_n == BigInt(f) &&
                       record.dstar_n == BigInt(dstar) &&
                       record.fstar_n == BigInt(fstar);
}

std::vector<CountRecord> count_table(int max_n, int bound) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  std::vector<CountRecord> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    CountRecord r = count_record(n);
    if (n <= bound) {
      set_brute_counts(r, count_class_bruteforce(n, PermClass::D, bound),
                       count_class_bruteforce(n, PermClass::F, bound),
                       count_class_bruteforce(n, PermClass::DStar, bound),
                       count_class_bruteforce(n, PermClass::FStar, bound));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace derange
