#include <functional>
#include <string>
#include <vector>

#include "doctest.h"

#include "derange/permutation.hpp"
#include "oracle.hpp"

using namespace derange;

namespace {

void check_throws(Errc expected, const std::function<void()>& fn) {
  try {
    fn();
    FAIL_CHECK("expected DomainError " << errc_name(expected));
  } catch (const DomainError& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("one-line construction and accessors") {
  const Permutation p = Permutation::from_one_line({2, 1, 4, 3});
  CHECK(p.size() == 4);
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(4) == 3);
  CHECK(p.one_line() == std::vector<int>{2, 1, 4, 3});

  const Permutation id = Permutation::identity(3);
  CHECK(id.one_line() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::identity(0).size() == 0);
  CHECK(Permutation::from_one_line({}).size() == 0);
}

TEST_CASE("one-line validation") {
  check_throws(Errc::RepeatedElement,
               [] { Permutation::from_one_line({1, 1}); });
  check_throws(Errc::ElementOutOfRange,
               [] { Permutation::from_one_line({2, 3}); });
  check_throws(Errc::ElementOutOfRange,
               [] { Permutation::from_one_line({0, 1}); });
}

TEST_CASE("cycle decomposition is canonical") {
  const Permutation p = Permutation::from_one_line({2, 1, 4, 3});
  const CycleForm c = to_cycle_form(p);
  CHECK(c.n == 4);
  CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

  const CycleForm single = to_cycle_form(Permutation::from_one_line({3, 4, 2, 1}));
  CHECK(single.cycles == std::vector<std::vector<int>>{{1, 3, 2, 4}});

  const CycleForm with_fixed = to_cycle_form(Permutation::from_one_line({1, 3, 2}));
  CHECK(with_fixed.cycles == std::vector<std::vector<int>>{{1}, {2, 3}});

  CHECK(to_cycle_form(Permutation::identity(0)).cycles.empty());
}

TEST_CASE("cycle form round trips through one-line form") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_permutation(n, [&](const std::vector<int>& im) {
      const Permutation p = Permutation::from_one_line(im);
      const CycleForm c = to_cycle_form(p);
      CHECK(from_cycle_form(c).one_line() == im);
    });
  }
}

TEST_CASE("cycle form validation") {
  check_throws(Errc::MissingElement,
               [] { validate_cycle_form(CycleForm{3, {{1, 2}}}); });
  check_throws(Errc::RepeatedElement,
               [] { validate_cycle_form(CycleForm{3, {{1, 2}, {2, 3}}}); });
  check_throws(Errc::ParseError,
               [] { validate_cycle_form(CycleForm{2, {{1, 2}, {}}}); });
  check_throws(Errc::ElementOutOfRange,
               [] { validate_cycle_form(CycleForm{2, {{1, 5}}}); });
  CHECK_NOTHROW(validate_cycle_form(CycleForm{0, {}}));
}

TEST_CASE("canonicalize rotates and sorts without changing the permutation") {
  CycleForm c{5, {{4, 5}, {3, 1, 2}}};
  const Permutation before = from_cycle_form(c);
  canonicalize(c);
  CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK(from_cycle_form(c) == before);

  canonicalize(c);  // idempotent
  CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
}

TEST_CASE("parsing cycle notation") {
  const CycleForm c = parse_cycles("(1,3)(2,4)");
  CHECK(c.n == 4);
  CHECK(c.cycles == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  CHECK(parse_cycles(" ( 1 , 3 ) ( 2 , 4 ) ") == c);
  CHECK(parse_cycles("(1 3)(2 4)") == c);   // whitespace as separator
  CHECK(parse_cycles("(2,4)(1,3)") == c);   // free cycle order
  CHECK(parse_cycles("(3,1)(4,2)") == c);   // free rotation

  const CycleForm f = parse_cycles("(2)(1,3,4)");
  CHECK(f.cycles == std::vector<std::vector<int>>{{1, 3, 4}, {2}});
}

TEST_CASE("parse errors") {
  check_throws(Errc::ParseError, [] { parse_cycles(""); });
  check_throws(Errc::ParseError, [] { parse_cycles("   "); });
  check_throws(Errc::ParseError, [] { parse_cycles("1,2"); });
  check_throws(Errc::ParseError, [] { parse_cycles("(1,2"); });
  check_throws(Errc::ParseError, [] { parse_cycles("()"); });
  check_throws(Errc::ParseError, [] { parse_cycles("(1,,2)"); });
  check_throws(Errc::ParseError, [] { parse_cycles("(0)"); });
  check_throws(Errc::ParseError, [] { parse_cycles("(1,2)x"); });
  check_throws(Errc::MissingElement, [] { parse_cycles("(1,3)"); });
  check_throws(Errc::RepeatedElement, [] { parse_cycles("(1,2)(1,3)"); });
}

TEST_CASE("formatting cycle notation") {
  const CycleForm c = parse_cycles("(1,3)(2,4)");
  CHECK(format_cycles(c) == "(1,3)(2,4)");
  CHECK(parse_cycles(format_cycles(c)) == c);

  const CycleForm f = parse_cycles("(2)(1,3,4)");
  CHECK(format_cycles(f) == "(1,3,4)(2)");
  CHECK(format_cycles(f, CycleFormat::FixedPointFirst) == "(2)(1,3,4)");

  check_throws(Errc::NotOneFixedPoint, [&] {
    format_cycles(c, CycleFormat::FixedPointFirst);
  });
  check_throws(Errc::NotOneFixedPoint, [] {
    format_cycles(parse_cycles("(1)(2)(3,4)"), CycleFormat::FixedPointFirst);
  });
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(Permutation::from_one_line({1, 3, 2})) ==
        std::vector<int>{1});
  CHECK(fixed_points(Permutation::from_one_line({2, 1})).empty());
  CHECK(fixed_points(Permutation::identity(3)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("excluded elements") {
  REQUIRE(excluded_derangement(4).has_value());
  CHECK(excluded_derangement(4)->one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(excluded_derangement(0)->size() == 0);
  CHECK_FALSE(excluded_derangement(3).has_value());
  CHECK_FALSE(excluded_derangement(-2).has_value());

  REQUIRE(excluded_one_fixed_point(5).has_value());
  CHECK(excluded_one_fixed_point(5)->one_line() ==
        std::vector<int>{1, 3, 2, 5, 4});
  CHECK(excluded_one_fixed_point(1)->one_line() == std::vector<int>{1});
  CHECK_FALSE(excluded_one_fixed_point(4).has_value());

  CHECK(is_excluded_derangement(*excluded_derangement(6)));
  CHECK_FALSE(is_excluded_derangement(Permutation::from_one_line({2, 3, 1})));
  CHECK(is_excluded_one_fixed_point(*excluded_one_fixed_point(7)));
  CHECK_FALSE(is_excluded_one_fixed_point(Permutation::identity(3)));
}

TEST_CASE("class membership agrees with the reference definitions") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_permutation(n, [&](const std::vector<int>& im) {
      const Permutation p = Permutation::from_one_line(im);
      const int fixed = oracle::fixed_count(im);
      const ClassSet set = classify(p);
      CHECK(set.s);
      CHECK(set.d == (fixed == 0));
      CHECK(set.f == (fixed == 1));
      CHECK(set.dstar == (fixed == 0 && !oracle::is_pair_involution(im)));
      CHECK(set.fstar == (fixed == 1 && !oracle::is_one_then_pairs(im)));
      for (PermClass cls : {PermClass::S, PermClass::D, PermClass::F,
                            PermClass::DStar, PermClass::FStar}) {
        CHECK(in_class(p, cls) == set.contains(cls));
      }
    });
  }
}

TEST_CASE("class names") {
  CHECK(std::string(class_name(PermClass::S)) == "s");
  CHECK(std::string(class_name(PermClass::DStar)) == "dstar");
  CHECK(std::string(class_name(PermClass::FStar)) == "fstar");
}
