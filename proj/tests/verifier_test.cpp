#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "shf/constructor.hpp"
#include "shf/errors.hpp"
#include "shf/verifier.hpp"

using shf::ColumnFamily;
using shf::ShfType;
using shf::Symbol;

TEST_CASE("row_separates: examples") {
  const std::vector<Symbol> row{1, 2, 0, 0};
  CHECK(shf::row_separates(row, ColumnFamily({{0}, {1}, {2, 3}})));
  CHECK_FALSE(shf::row_separates(row, ColumnFamily({{2}, {3}, {0, 1}})));
  const std::vector<Symbol> flat{0, 0, 0, 0};
  CHECK_FALSE(shf::row_separates(flat, ColumnFamily({{0}, {3}})));
  CHECK_THROWS_AS(shf::row_separates(row, ColumnFamily({{0}, {7}})),
                  shf::DomainError);
}

TEST_CASE("enumerate_families: counts for the hand-derived cases") {
  CHECK(shf::list_families(4, ShfType{1, 1, 2}).size() == 6);
  CHECK(shf::list_families(4, ShfType{2, 2}).size() == 3);
  CHECK(shf::list_families(4, ShfType{1, 1, 1, 1}).size() == 1);
  CHECK(shf::family_count(4, ShfType{1, 1, 2}) == 6);
  CHECK(shf::family_count(4, ShfType{2, 2}) == 3);
  CHECK(shf::family_count(4, ShfType{1, 1, 1, 1}) == 1);
  CHECK_THROWS_AS(shf::list_families(3, ShfType{2, 2}), shf::DomainError);
}

TEST_CASE("enumerate_families: strictly increasing canonical order, unique") {
  for (const ShfType &t : {ShfType{1, 1, 2}, ShfType{2, 2, 3}, ShfType{1, 2, 2},
                           ShfType{1, 1, 1, 2}}) {
    const auto fams = shf::list_families(8, t);
    for (std::size_t i = 1; i < fams.size(); ++i)
      REQUIRE(fams[i - 1].encode() < fams[i].encode());
    for (const auto &f : fams)
      REQUIRE(ColumnFamily(f.parts()) == f); // already canonical
  }
}

TEST_CASE("family_count: closed form vs enumeration vs labelled oracle") {
  const std::vector<std::vector<std::size_t>> types{
      {1, 1}, {1, 2}, {1, 1, 2}, {2, 2}, {1, 1, 1, 3}, {2, 2, 3}, {1, 2, 3}};
  for (const auto &b : types) {
    const ShfType t(b);
    for (std::size_t n = t.u(); n <= 8; ++n) {
      const auto listed = shf::list_families(n, t).size();
      REQUIRE(shf::family_count(n, t) == listed);
      REQUIRE(oracle::ordered_tuple_count(n, b) == listed * t.orderings());
    }
  }
}

TEST_CASE("verify: constructed matrix and a failing single row") {
  const auto m = shf::construct(5, 3, 1, 2);
  const auto v = shf::verify(m, ShfType{1, 1, 2});
  CHECK(v.ok);
  CHECK_FALSE(v.witness);
  CHECK(v.families_checked == shf::family_count(5, ShfType{1, 1, 2}));

  const shf::RepMatrix one(3, {{1, 2, 0, 0}});
  const auto bad = shf::verify(one, ShfType{1, 1, 2});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  // Canonical order starts {0},{1} | {2,3} (separated, the only one), then
  // {0},{2} | {1,3}.
  CHECK(bad.witness->encode() == std::vector<shf::Column>{0, 2, 1, 3});
  CHECK(bad.families_checked == 2);
  const std::vector<Symbol> row{1, 2, 0, 0};
  CHECK(shf::count_separated_by_row_bruteforce(row, ShfType{1, 1, 2}, false) == 1);
  CHECK(shf::count_separated_by_row_bruteforce(row, ShfType{1, 1, 2}, true) == 2);

  CHECK_THROWS_AS(shf::verify(one, ShfType{2, 3}), shf::DomainError);
  CHECK_THROWS_AS(shf::verify(one, ShfType{1, 1, 1, 1}), shf::DomainError);
}

TEST_CASE("verify: constant rows change nothing") {
  auto m = shf::construct(6, 3, 1, 3);
  const ShfType t{1, 1, 3};
  const auto before = shf::verify(m, t);
  const std::vector<Symbol> constant(6, 2);
  m.append_row(constant);
  const auto after = shf::verify(m, t);
  CHECK(before.ok == after.ok);
  CHECK(before.families_checked == after.families_checked);

  auto broken = shf::construct(6, 3, 1, 3).without_row(4);
  const auto b1 = shf::verify(broken, t);
  broken.append_row(constant);
  const auto b2 = shf::verify(broken, t);
  CHECK_FALSE(b1.ok);
  CHECK(b1.witness == b2.witness);
  CHECK(b1.families_checked == b2.families_checked);
}

TEST_CASE("verify: witness and count independent of worker count") {
  const ShfType t{2, 2, 4};
  const auto full = shf::construct(9, 3, 2, 4);
  for (std::size_t drop : {0u, 17u, 200u, 377u}) {
    const auto m = full.without_row(drop);
    const auto ref = shf::verify(m, t, {1});
    REQUIRE_FALSE(ref.ok);
    for (unsigned threads : {2u, 3u, 8u, 16u}) {
      const auto v = shf::verify(m, t, {threads});
      REQUIRE_FALSE(v.ok);
      REQUIRE(v.witness == ref.witness);
      REQUIRE(v.families_checked == ref.families_checked);
    }
  }
  const auto ok1 = shf::verify(full, t, {1});
  const auto ok8 = shf::verify(full, t, {8});
  CHECK(ok1.ok);
  CHECK(ok8.ok);
  CHECK(ok1.families_checked == ok8.families_checked);
}

TEST_CASE("count_separated_by_row: brute force examples") {
  const ShfType t{1, 1, 2};
  CHECK(shf::count_separated_by_row_bruteforce(std::vector<Symbol>{1, 2, 0, 0}, t,
                                               true) == 2);
  CHECK(shf::count_separated_by_row_bruteforce(std::vector<Symbol>{1, 2, 0, 0, 0},
                                               t, true) == 6);
  CHECK(shf::count_separated_by_row_bruteforce(std::vector<Symbol>(6, 1),
                                               ShfType{1, 2}, true) == 0);
  CHECK_THROWS_AS(shf::count_separated_by_row_bruteforce(
                      std::vector<Symbol>{0, 1}, t, true),
                  shf::DomainError);
}

TEST_CASE("count_separated_by_row: formula examples and hypotheses") {
  CHECK(shf::count_separated_by_row_formula({{2, 1, 1}}, 1, 2, 4, 3) == 2);
  CHECK(shf::count_separated_by_row_formula({{3, 1, 1}}, 1, 2, 5, 3) == 6);
  CHECK(shf::count_separated_by_row_formula({{4, 2, 2, 2}}, 2, 4, 10, 4) == 6);
  CHECK(shf::count_separated_by_row_formula({{5, 3, 3}}, 3, 5, 11, 3) == 2);
  // i_k = w2 is outside the hypotheses.
  CHECK_THROWS_AS(shf::count_separated_by_row_formula({{2, 1, 2}}, 1, 2, 5, 3),
                  shf::DomainError);
  CHECK_THROWS_AS(shf::count_separated_by_row_formula({{1, 1, 1}}, 1, 2, 3, 3),
                  shf::DomainError);
  CHECK_THROWS_AS(shf::count_separated_by_row_formula({{3, 1, 1}}, 1, 2, 6, 3),
                  shf::DomainError);
}

TEST_CASE("brute-force counter agrees with the labelled-tuple oracle") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t q = 2 + rng() % 3;
    std::vector<Symbol> row(n);
    for (auto &s : row)
      s = static_cast<Symbol>(rng() % q);
    std::vector<std::vector<std::size_t>> types{{1, 1}, {1, 2}, {1, 1, 1},
                                                {1, 1, 2}, {2, 2}};
    for (const auto &b : types) {
      const ShfType t(b);
      if (t.u() > n)
        continue;
      REQUIRE(shf::count_separated_by_row_bruteforce(row, t, true) ==
              oracle::ordered_separated(row, b));
    }
  }
}

TEST_CASE("formula matches brute force for a small weight sweep") {
  for (std::size_t n = 4; n <= 7; ++n)
    for (std::size_t i1 = 1; i1 < 3; ++i1)
      for (std::size_t i2 = 1; i2 < 3; ++i2) {
        if (i1 + i2 + 3 > n)
          continue;
        std::vector<Symbol> row;
        row.insert(row.end(), n - i1 - i2, 0);
        row.insert(row.end(), i1, 1);
        row.insert(row.end(), i2, 2);
        const auto w = shf::weight_of_row(row, 3);
        REQUIRE(shf::count_separated_by_row_formula(w, 1, 3, n, 3) ==
                shf::count_separated_by_row_bruteforce(row, ShfType{1, 1, 3}, true));
      }
}

TEST_CASE("find_redundant_rows") {
  const ShfType t{1, 1, 2};
  const auto m = shf::construct(5, 3, 1, 2);
  CHECK(shf::find_redundant_rows(m, t).empty());

  auto dup = m;
  dup.append_row(m.row(3));
  const auto r = shf::find_redundant_rows(dup, t);
  CHECK(r == std::vector<std::size_t>{3, 10});

  auto padded = m;
  padded.append_row(std::vector<Symbol>(5, 1));
  CHECK(shf::find_redundant_rows(padded, t) == std::vector<std::size_t>{10});

  CHECK_THROWS_AS(shf::find_redundant_rows(m.without_row(0), t), shf::DomainError);
}

TEST_CASE("constructed matrices: each family separated by exactly one row") {
  for (auto [n, q, w1, w2] : std::vector<std::array<std::size_t, 4>>{
           {5, 3, 1, 2}, {7, 3, 1, 3}, {7, 3, 2, 3}, {6, 4, 1, 2}, {9, 3, 2, 4}}) {
    const auto m = shf::construct(n, q, w1, w2);
    const ShfType t = ShfType::repeated(w1, q - 1, w2);
    shf::enumerate_families(n, t, [&](const ColumnFamily &f) {
      std::size_t hits = 0;
      for (std::size_t r = 0; r < m.rows(); ++r)
        hits += shf::row_separates(m.row(r), f) ? 1 : 0;
      REQUIRE(hits == 1);
      return true;
    });
    // Ordered total equals C(n,w1) C(n-w1,w1) ... C(n-(q-1)w1, w2).
    shf::BigCount ordered = 1;
    for (std::size_t j = 0; j + 1 < q; ++j)
      ordered *= shf::binom(n - j * w1, w1);
    ordered *= shf::binom(n - (q - 1) * w1, w2);
    CHECK(shf::family_count(n, t) * t.orderings() == ordered);
  }
}

TEST_CASE("endpoint counterexample: 9 rows separate {1,1,2} on 5 columns") {
  // The closed-form requirement at n = 5 is 10 rows; this matrix was found
  // by an exact set-cover search and uses rows of weight (2,2,1).
  const shf::RepMatrix m(3, {{2, 1, 0, 0, 1},
                             {2, 1, 0, 0, 2},
                             {2, 1, 0, 1, 0},
                             {2, 1, 0, 2, 0},
                             {2, 1, 1, 0, 0},
                             {2, 1, 2, 0, 0},
                             {2, 2, 1, 0, 2},
                             {2, 2, 1, 2, 0},
                             {2, 2, 2, 1, 0}});
  const auto v = shf::verify(m, ShfType{1, 1, 2});
  CHECK(v.ok);
  CHECK(shf::construction_size(5, 3, 1) == 10);
  // A weight-(2,2,1) row separates 8 ordered tuples, the tight weight 6.
  CHECK(shf::count_separated_by_row_bruteforce(std::vector<Symbol>{0, 0, 1, 1, 2},
                                               ShfType{1, 1, 2}, true) == 8);
  CHECK(shf::count_separated_by_row_bruteforce(std::vector<Symbol>{0, 0, 0, 1, 2},
                                               ShfType{1, 1, 2}, true) == 6);
}
