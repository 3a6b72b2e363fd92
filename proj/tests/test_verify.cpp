#include <string>
#include <vector>

#include "doctest.h"

#include "derange/verify.hpp"

using namespace derange;

TEST_CASE("exhaustive verification of the published sizes") {
  const VerifyReport r4 = verify_n(4);
  CHECK(r4.ok());
  CHECK(r4.bijective);
  CHECK(r4.inverse_ok);
  CHECK(r4.excluded_count_d == 1);
  CHECK(r4.excluded_count_f == 0);
  CHECK(r4.dstar_count == 8);
  CHECK(r4.fstar_count == 8);
  CHECK(r4.image_count == 8);
  CHECK(r4.failures.empty());
  CHECK(r4.cardinalities.consistent());
  REQUIRE(r4.cardinalities.d_brute.has_value());
  CHECK(*r4.cardinalities.d_brute == 9);

  const VerifyReport r5 = verify_n(5);
  CHECK(r5.ok());
  CHECK(r5.excluded_count_d == 0);
  CHECK(r5.excluded_count_f == 1);
  CHECK(r5.dstar_count == 44);
  CHECK(r5.fstar_count == 44);
  CHECK(r5.image_count == 44);
  CHECK(r5.cardinalities.f_n == 45);
}

TEST_CASE("small sizes verify vacuously") {
  const VerifyReport r1 = verify_n(1);
  CHECK(r1.ok());
  CHECK(r1.dstar_count == 0);
  CHECK(r1.fstar_count == 0);
  CHECK(r1.excluded_count_d == 0);
  CHECK(r1.excluded_count_f == 1);

  const VerifyReport r0 = verify_n(0);
  CHECK(r0.ok());
  CHECK(r0.excluded_count_d == 1);
  CHECK(r0.dstar_count == 0);

  const VerifyReport r2 = verify_n(2);
  CHECK(r2.ok());
  CHECK(r2.excluded_count_d == 1);
  CHECK(r2.dstar_count == 0);
  CHECK(r2.fstar_count == 0);
}

TEST_CASE("sharded runs reproduce the single-shard report") {
  const VerifyReport one = verify_n(6, 1);
  CHECK(one.ok());
  CHECK(verify_n(6, 2) == one);
  CHECK(verify_n(6, 3) == one);
  CHECK(verify_n(6, 6) == one);
  CHECK(verify_n(6, 64) == one);  // more workers than shards
  CHECK(verify_n(7, 4) == verify_n(7, 1));
}

TEST_CASE("verification bound") {
  CHECK_THROWS_AS(verify_n(10), DomainError);
  try {
    verify_n(10);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::BoundExceeded);
  }
  CHECK_THROWS_AS(verify_n(-1), std::invalid_argument);
  CHECK_THROWS_AS(verify_n(5, 1, 13), std::invalid_argument);
  CHECK(verify_n(5, 1, 5).ok());
}

TEST_CASE("golden rows match the embedded reference") {
  const auto& ref = golden_reference();
  REQUIRE(ref.size() == 17);

  const auto rows = golden_compare();
  REQUIRE(rows.size() == 17);
  for (const GoldenComparison& cmp : rows) {
    CAPTURE(cmp.reference.pi);
    CHECK(cmp.match);
  }

  // size-4 block, then the size-5 block led by the no-preimage entry
  CHECK(ref[0].pi == "(12)(34)");
  CHECK(ref[0].image == "-");
  CHECK(ref[9].pi == "-");
  CHECK(ref[9].image == "(1)(23)(45)");
  CHECK(ref[16].pi == "...");

  int mapped = 0;
  for (const GoldenRow& row : ref) {
    if (row.k.has_value()) {
      ++mapped;
      CHECK(row.a1.has_value());
      REQUIRE(row.tag.has_value());
      CHECK(*row.tag != MapCase::Excluded);
    }
  }
  CHECK(mapped == 14);
}

TEST_CASE("tampered golden data is detected") {
  // image tampered
  std::vector<GoldenRow> ref = golden_reference();
  ref[3].image = "(3)(124)";
  auto rows = golden_compare(ref);
  CHECK_FALSE(rows[3].match);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != 3) CHECK(rows[i].match);
  }

  // tag tampered
  ref = golden_reference();
  ref[10].tag = MapCase::II;
  CHECK_FALSE(golden_compare(ref)[10].match);

  // a1 tampered
  ref = golden_reference();
  ref[13].a1 = 4;
  CHECK_FALSE(golden_compare(ref)[13].match);

  // row count tampered
  ref = golden_reference();
  ref.pop_back();
  CHECK_THROWS_AS(golden_compare(ref), std::invalid_argument);
}

TEST_CASE("separator normalization") {
  CHECK(normalize_cycles("(1,2)(3,4)") == "(12)(34)");
  CHECK(normalize_cycles("(12)(34)") == "(12)(34)");
  CHECK(normalize_cycles(" (1, 2) (3 4) ") == "(12)(34)");
  CHECK(normalize_cycles("-") == "-");
}

TEST_CASE("golden tables carry the published tags") {
  const auto rows = golden_tables();
  REQUIRE(rows.size() == 17);

  CHECK(rows[1].image == "(1)(2,3,4)");
  REQUIRE(rows[1].tag.has_value());
  CHECK(*rows[1].tag == MapCase::II);
  CHECK(rows[1].k == 0);
  CHECK(rows[1].a1 == 3);

  CHECK(rows[10].image == "(1)(2,4)(3,5)");
  CHECK(*rows[10].tag == MapCase::I);
  CHECK(rows[10].k == 1);
  CHECK(rows[10].a1 == 4);

  CHECK(rows[15].image == "(5)(1,4)(2,3)");
  CHECK(*rows[15].tag == MapCase::I);
  CHECK(rows[15].k == 0);
  CHECK(rows[15].a1 == 5);

  CHECK(rows[9].pi == "-");
  CHECK(rows[9].image == "(1)(2,3)(4,5)");
}
