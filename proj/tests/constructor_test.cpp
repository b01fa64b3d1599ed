#include <doctest.h>

#include <sstream>

#include "shf/bounds.hpp"
#include "shf/constructor.hpp"
#include "shf/errors.hpp"
#include "shf/verifier.hpp"

using shf::Column;
using shf::ShfType;
using shf::Symbol;
using shf::TauTuple;

TEST_CASE("tau_stream: hand enumeration for n=4, q=3, w1=1") {
  const auto t = shf::tau_tuples(4, 3, 1);
  const std::vector<TauTuple> expected{
      {{{0}, {1}}}, {{{0}, {2}}}, {{{0}, {3}}},
      {{{1}, {2}}}, {{{1}, {3}}}, {{{2}, {3}}}};
  CHECK(t == expected);
}

TEST_CASE("tau_stream: q = 2 gives all w1-subsets") {
  const auto t = shf::tau_tuples(3, 2, 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0].parts == std::vector<std::vector<Column>>{{0, 1}});
  CHECK(t[2].parts == std::vector<std::vector<Column>>{{1, 2}});
}

TEST_CASE("tau_stream: n=6, q=4, w1=2 has 15 tuples satisfying the invariants") {
  const auto t = shf::tau_tuples(6, 4, 2);
  CHECK(t.size() == 15);
  for (const auto &tuple : t) {
    std::vector<Column> all;
    for (std::size_t k = 0; k < tuple.parts.size(); ++k) {
      REQUIRE(tuple.parts[k].size() == 2);
      if (k)
        REQUIRE(tuple.parts[k - 1].front() < tuple.parts[k].front());
      all.insert(all.end(), tuple.parts[k].begin(), tuple.parts[k].end());
    }
    std::sort(all.begin(), all.end());
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK_THROWS_AS(shf::tau_tuples(5, 4, 2), shf::DomainError);
}

TEST_CASE("tau_stream: count equals construction_size, order is lexicographic") {
  for (std::size_t q = 2; q <= 4; ++q)
    for (std::size_t w1 = 1; w1 <= 3; ++w1)
      for (std::size_t n = (q - 1) * w1; n <= 12; ++n) {
        std::size_t count = 0;
        std::vector<Column> prev;
        shf::tau_stream(n, q, w1, [&](const TauTuple &t) {
          std::vector<Column> flat;
          for (const auto &p : t.parts)
            flat.insert(flat.end(), p.begin(), p.end());
          if (count)
            REQUIRE(prev < flat);
          prev = flat;
          ++count;
          return true;
        });
        REQUIRE(shf::construction_size(n, q, w1) == count);
      }
}

TEST_CASE("row_of_tuple") {
  CHECK(shf::row_of_tuple({{{0}, {2}}}, 4) == std::vector<Symbol>{1, 0, 2, 0});
  CHECK(shf::row_of_tuple({{{0, 1}, {2, 3}}}, 5) ==
        std::vector<Symbol>{1, 1, 2, 2, 0});
  for (const auto &t : shf::tau_tuples(7, 3, 2)) {
    const auto w = shf::weight_of_row(shf::row_of_tuple(t, 7), 3);
    REQUIRE(w.counts == std::vector<std::size_t>{3, 2, 2});
  }
}

TEST_CASE("construct: examples") {
  const auto a = shf::construct(5, 3, 1, 2);
  CHECK(a.rows() == 10);
  CHECK(shf::verify(a, ShfType{1, 1, 2}).ok);

  const auto b = shf::construct(4, 2, 1, 3);
  CHECK(b.rows() == 4);
  for (std::size_t r = 0; r < 4; ++r)
    CHECK(shf::weight_of_row(b.row(r), 2).counts ==
          std::vector<std::size_t>{3, 1});
  CHECK(shf::verify(b, ShfType{1, 3}).ok);

  CHECK(shf::construct(7, 3, 2, 3).rows() == 105);
  CHECK(shf::main_min_N(7, 3, 2, 3) == 105);

  CHECK_THROWS_AS(shf::construct(4, 3, 2, 3), shf::DomainError);
  CHECK_THROWS_AS(shf::construct(9, 3, 3, 3), shf::DomainError);
}

TEST_CASE("construct: rows follow tau order and match the streamed file") {
  const auto m = shf::construct(6, 4, 1, 2);
  const auto tuples = shf::tau_tuples(6, 4, 1);
  REQUIRE(m.rows() == tuples.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = shf::row_of_tuple(tuples[r], 6);
    REQUIRE(std::equal(row.begin(), row.end(), m.row(r).begin()));
  }
  std::ostringstream out;
  const auto rows = shf::write_construction(out, 6, 4, 1, 2);
  CHECK(rows == m.rows());
  const auto parsed = shf::parse_matrix(out.str());
  CHECK(parsed.matrix == m);
  REQUIRE(parsed.stamped_type);
  CHECK(*parsed.stamped_type == ShfType{1, 1, 1, 2});
}

TEST_CASE("construct: removing any row breaks separation inside the range") {
  for (auto [q, w1, w2] : std::vector<std::array<std::size_t, 3>>{
           {3, 1, 2}, {3, 1, 3}, {3, 2, 3}, {4, 1, 2}}) {
    const auto range = shf::valid_n_range(q, w1, w2);
    const ShfType t = ShfType::repeated(w1, q - 1, w2);
    for (std::size_t n = range.lo; n <= range.hi; ++n) {
      const auto m = shf::construct(n, q, w1, w2);
      for (std::size_t r = 0; r < m.rows(); r += 3)
        REQUIRE_FALSE(shf::verify(m.without_row(r), t).ok);
    }
  }
}
