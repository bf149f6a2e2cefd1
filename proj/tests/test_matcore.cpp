#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "hwm/matcore.hpp"
#include "hwm/matrix_io.hpp"
#include "test_util.hpp"

using namespace hwm;

TEST_CASE("ternary matrix rejects entries outside {-1,0,1}") {
  TernaryMatrix m(2);
  REQUIRE_THROWS_AS(m.set(0, 0, 2), Error);
  REQUIRE_THROWS_AS(TernaryMatrix::from_rows({{1, 0}, {0}}), Error);
}

TEST_CASE("is_weighing") {
  SECTION("circulant CW(6,4) has weight 4") {
    const std::vector<int> row{0, 1, 1, 0, 1, -1};
    REQUIRE(is_weighing(from_first_row(row, Layout::circulant)) == 4);
  }
  SECTION("identity has weight 1") {
    for (std::size_t n : {1u, 3u, 7u}) REQUIRE(is_weighing(identity_matrix(n)) == 1);
  }
  SECTION("all-ones 2x2 is not weighing") { REQUIRE_FALSE(is_weighing(TernaryMatrix{{1, 1}, {1, 1}})); }
  SECTION("zero matrix has weight 0") { REQUIRE(is_weighing(TernaryMatrix(3)) == 0); }
  SECTION("unequal row norms are rejected") { REQUIRE_FALSE(is_weighing(TernaryMatrix{{1, 0}, {0, 0}})); }
}

TEST_CASE("hankel, anticirculant and circulant predicates") {
  const auto aw = test::fixture("AW84");
  REQUIRE(is_hankel(aw));
  REQUIRE(is_anticirculant(aw));
  REQUIRE(is_hollow(aw));
  REQUIRE(is_symmetric(aw));
  REQUIRE_FALSE(is_circulant(aw));

  const auto cw = test::fixture("CW64");
  REQUIRE(is_circulant(cw));
  REQUIRE_FALSE(is_hankel(cw));
  REQUIRE_FALSE(is_symmetric(cw));

  SECTION("Hankel but not anticirculant") {
    const SkewProfile p(3, {1, 0, 1, 0, -1});
    const auto m = p.to_matrix();
    REQUIRE(is_hankel(m));
    REQUIRE_FALSE(is_anticirculant(m));
  }
}

TEST_CASE("skew profile") {
  SECTION("round trip through the matrix") {
    const auto m = test::fixture("AW84");
    const auto p = skew_profile(m);
    REQUIRE(p.values().size() == 15);
    REQUIRE(p.to_matrix() == m);
    REQUIRE(p.hollow());
  }
  SECTION("length must be 2n-1") { REQUIRE_THROWS_AS(SkewProfile(3, {0, 1, 0}), Error); }
  SECTION("non-Hankel input raises NotHankel") {
    try {
      (void)skew_profile(test::fixture("CW64"));
      FAIL("expected NotHankel");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotHankel);
    }
  }
  SECTION("hollow iff every even skew-diagonal vanishes") {
    REQUIRE_FALSE(SkewProfile(2, {1, 0, 0}).hollow());
    REQUIRE(SkewProfile(2, {0, 1, 0}).hollow());
    REQUIRE(is_hollow(SkewProfile(2, {0, 1, 0}).to_matrix()));
  }
}

TEST_CASE("symbols") {
  SECTION("AW(8,4) symbol") {
    const auto s = symbol_of(test::fixture("AW84"), Layout::anticirculant);
    REQUIRE(s.support == std::vector<std::size_t>{2, 4, 6, 8});
    REQUIRE(s.signs == std::vector<int>{1, 1, 1, -1});
  }
  SECTION("CW(6,4) uses shift residues") {
    const Symbol s(6, {1, 2, 4, 5}, {1, 1, 1, -1});
    REQUIRE(from_symbol(s, Layout::circulant) == test::fixture("CW64"));
    REQUIRE(symbol_of(test::fixture("CW64"), Layout::circulant) == s);
  }
  SECTION("validation") {
    REQUIRE_THROWS_AS(Symbol(4, {0, 2}, {1, 1}), Error);
    REQUIRE_THROWS_AS(Symbol(4, {2, 2}, {1, 1}), Error);
    REQUIRE_THROWS_AS(Symbol(4, {5}, {1}), Error);
    REQUIRE_THROWS_AS(Symbol(4, {1, 2}, {1}), Error);
    REQUIRE_THROWS_AS(Symbol(4, {1}, {0}), Error);
  }
  SECTION("random round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      std::vector<int> row(n);
      for (int& x : row) x = static_cast<int>(rng() % 3) - 1;
      for (auto layout : {Layout::anticirculant, Layout::circulant}) {
        const auto m = from_first_row(row, layout);
        REQUIRE(first_row_of(symbol_of(m, layout), layout) == row);
      }
    }
  }
}

TEST_CASE("anticirculant weighing iff cyclic autocorrelation vanishes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<int> row(n);
    for (int& x : row) x = static_cast<int>(rng() % 3) - 1;
    bool zero_off_phase = true;
    for (std::size_t s = 1; s < n; ++s) {
      int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * row[(j + s) % n];
      zero_off_phase = zero_off_phase && acc == 0;
    }
    REQUIRE(is_weighing(from_first_row(row, Layout::anticirculant)).has_value() == zero_off_phase);
    REQUIRE(is_weighing(from_first_row(row, Layout::circulant)).has_value() == zero_off_phase);
  }
}

TEST_CASE("kronecker and exchange matrices") {
  REQUIRE(exchange_matrix(3) == TernaryMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  REQUIRE(is_weighing(exchange_matrix(5)) == 1);
  const auto m44 = test::fixture("M44");
  REQUIRE(kronecker(m44, exchange_matrix(2)) == test::fixture("AW84"));
  REQUIRE(is_weighing(kronecker(m44, m44)) == 16);
  REQUIRE(reverse_columns(identity_matrix(3)) == exchange_matrix(3));
}

TEST_CASE("matrix text format") {
  SECTION("format") { REQUIRE(format_matrix(TernaryMatrix{{1, -1}, {0, 1}}) == "2\n1 -1\n0 1\n"); }
  SECTION("fixtures round trip byte for byte") {
    for (const char* name : {"M44", "CW64", "M64", "M74", "AW84", "M124"}) {
      const std::string text = test::read_text(test::fixture_path(name));
      REQUIRE(format_matrix(parse_matrix(text)) == text);
    }
  }
  SECTION("tolerates CRLF and a trailing blank line") {
    REQUIRE(parse_matrix("2\r\n1 0\r\n0 1\r\n\n") == identity_matrix(2));
  }
  SECTION("malformed input") {
    for (const char* bad : {"", "0\n", "-1\n", "2\n1 0\n", "2\n1 0\n0\n", "2\n1 2\n0 1\n", "2\n1 x\n0 1\n",
                            "2\n1 0\n0 1\n1 1\n", "x\n"}) {
      INFO(bad);
      try {
        (void)parse_matrix(bad);
        FAIL("expected ParseError");
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ParseError);
      }
    }
  }
}
