#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/error.hpp"
#include "braidinv/families.hpp"
#include "generators.hpp"

using namespace braidinv;

namespace {

// Unreduced Burau matrix at t = 2, an independent faithful-enough check that
// two words are equal in B_n.
using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix times(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix burau(const BraidWord& w) {
  const Rational t = 2;
  Matrix m = identity_matrix(w.strands());
  for (const auto& l : w.letters()) {
    Matrix g = identity_matrix(w.strands());
    const auto i = static_cast<std::size_t>(l.index - 1);
    if (l.sign() > 0) {
      g[i][i] = 1 - t;
      g[i][i + 1] = t;
      g[i + 1][i] = 1;
      g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0;
      g[i][i + 1] = 1;
      g[i + 1][i] = 1 / t;
      g[i + 1][i + 1] = 1 - 1 / t;
    }
    m = times(m, g);
  }
  return m;
}

Rational trace(const Matrix& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i][i];
  return s;
}

}  // namespace

TEST_CASE("parsing braid words") {
  const auto w = parse_braid("3 2 1 -4");
  CHECK(w.strands() == 5);
  CHECK(w.signed_indices() == std::vector<int>{3, 2, 1, -4});

  const auto h = parse_braid("n=6; 3,2 , -1");
  CHECK(h.strands() == 6);
  CHECK(h.signed_indices() == std::vector<int>{3, 2, -1});

  const auto s = parse_braid("n=4; 1 S2 -3");
  CHECK(s.has_singular());
  CHECK(s.singular_count() == 1);
  CHECK(s[1] == BraidLetter::sing(2));
  CHECK_THROWS_AS((void)s.signed_indices(), DomainError);

  CHECK(parse_braid("").strands() == 1);
  CHECK(parse_braid("n=3;").empty());
  CHECK(parse_braid("n=5; 3 2 1 -4 3 2 1 4").to_string() == "n=5; 3 2 1 -4 3 2 1 4");
  CHECK(s.to_string() == "n=4; 1 S2 -3");
}

TEST_CASE("malformed braid words are rejected with ParseError") {
  for (const char* bad : {"0", "1 x 2", "n=3; 3", "n=0;", "n=3 1 2", "n=; 1", "S0", "1.5", "--1"})
    CHECK_THROWS_AS(parse_braid(bad), ParseError);
  CHECK_THROWS_AS(BraidWord(3, {BraidLetter::pos(3)}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0), std::invalid_argument);
}

TEST_CASE("text form round-trips, randomized") {
  testing::Gen g(21);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 7);
    const auto w = g.word(n, g.uniform(0, 12));
    CHECK(parse_braid(w.to_string()) == w);
  }
}

TEST_CASE("permutation of a word is a homomorphism, randomized") {
  testing::Gen g(22);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 7);
    const auto u = g.word(n, g.uniform(0, 10));
    const auto v = g.word(n, g.uniform(0, 10));
    CHECK(permutation_of(u * v) == permutation_of(u) * permutation_of(v));
    CHECK(permutation_of(u.inverse()) == permutation_of(u).inverse());
    CHECK(writhe(u * v) == writhe(u) + writhe(v));
    CHECK(writhe(u.inverse()) == -writhe(u));
  }
}

TEST_CASE("knot detection") {
  CHECK(is_knot(parse_braid("1 1 1")));
  CHECK_FALSE(is_knot(parse_braid("1 1")));
  CHECK(is_knot(parse_braid("n=4; 3 2 1")));
  CHECK_FALSE(is_knot(parse_braid("n=4; 1")));
  CHECK(is_knot(BraidWord(1)));
  CHECK(permutation_of(parse_braid("n=4; S1 2 3"), true).is_full_cycle());
  CHECK_THROWS_AS((void)permutation_of(parse_braid("n=4; S1 2 3")), DomainError);
}

TEST_CASE("braid relations preserve the group element, randomized") {
  testing::Gen g(23);
  int applied = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = g.uniform(3, 6);
    const auto w = g.word(n, g.uniform(2, 10));
    const auto pos = static_cast<std::size_t>(g.uniform(0, static_cast<int>(w.size()) - 1));
    BraidWord moved;
    try {
      moved = apply_braid_relation(w, pos);
    } catch (const MoveError&) {
      continue;
    }
    ++applied;
    CHECK(burau(moved) == burau(w));
    CHECK(permutation_of(moved) == permutation_of(w));
    CHECK(writhe(moved) == writhe(w));
  }
  CHECK(applied > 100);
}

TEST_CASE("explicit braid relations") {
  CHECK(apply_braid_relation(parse_braid("1 2 1"), 0) == parse_braid("2 1 2"));
  CHECK(apply_braid_relation(parse_braid("1 2 -1"), 0) == parse_braid("-2 1 2"));
  CHECK(apply_braid_relation(parse_braid("-1 -2 -1"), 0) == parse_braid("-2 -1 -2"));
  CHECK(apply_braid_relation(parse_braid("n=4; 1 3"), 0) == parse_braid("n=4; 3 1"));
  CHECK_THROWS_AS(apply_braid_relation(parse_braid("1 2"), 0), MoveError);
  CHECK_THROWS_AS(apply_braid_relation(parse_braid("1 1 1"), 0), MoveError);
  CHECK_THROWS_AS(apply_braid_relation(parse_braid("1 -2 1"), 0), MoveError);
}

TEST_CASE("free reduction and inverses") {
  CHECK(free_reduce(parse_braid("1 2 -2 -1 3")) == parse_braid("n=4; 3"));
  testing::Gen g(24);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 6);
    const auto w = g.word(n, g.uniform(0, 10));
    CHECK(free_reduce(w * w.inverse()).empty());
    const auto r = free_reduce(w);
    CHECK(burau(r) == burau(w));
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("conjugation and rotation preserve the closure data, randomized") {
  testing::Gen g(25);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 6);
    const auto w = g.word(n, g.uniform(1, 10));
    const auto c = g.word(n, g.uniform(0, 5));
    const long k = g.uniform(-15, 15);
    for (const auto& moved : {conjugate(w, c), cyclic_rotate(w, k)}) {
      CHECK(trace(burau(moved)) == trace(burau(w)));
      CHECK(permutation_of(moved).cycle_type() == permutation_of(w).cycle_type());
      CHECK(writhe(moved) == writhe(w));
      CHECK(is_knot(moved) == is_knot(w));
    }
    CHECK(cyclic_rotate(cyclic_rotate(w, k), -k) == w);
    CHECK(cyclic_rotate(w, static_cast<long>(w.size())) == w);
  }
  CHECK(cyclic_rotate(parse_braid("1 2 3"), 1) == parse_braid("2 3 1"));
  CHECK(cyclic_rotate(parse_braid("1 2 3"), -1) == parse_braid("3 1 2"));
}

TEST_CASE("stabilization") {
  const auto w = parse_braid("1 1 1");
  const auto s = stabilize(w, -1);
  CHECK(s == parse_braid("n=3; 1 1 1 -2"));
  CHECK(destabilize(s) == w);
  CHECK(is_knot(s));
  CHECK_THROWS_AS(destabilize(parse_braid("2 1 2")), MoveError);
  CHECK_THROWS_AS(destabilize(parse_braid("2 1")), MoveError);
  CHECK_THROWS_AS(stabilize(w, 0), std::invalid_argument);

  testing::Gen g(26);
  for (int trial = 0; trial < 500; ++trial) {
    const auto k = g.knot(g.uniform(2, 5), 1, 9);
    const int e = g.coin() ? 1 : -1;
    const auto st = stabilize(k, e);
    CHECK(is_knot(st));
    CHECK(writhe(st) == writhe(k) + e);
    CHECK(destabilize(st) == k);
  }
}

TEST_CASE("flip turns the braid over") {
  CHECK(flip(parse_braid("n=4; 1 -2 3")) == parse_braid("n=4; 3 -2 1"));
  testing::Gen g(27);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = g.word(g.uniform(2, 7), g.uniform(0, 10));
    CHECK(flip(flip(w)) == w);
    CHECK(writhe(flip(w)) == writhe(w));
    CHECK(is_knot(flip(w)) == is_knot(w));
  }
}

TEST_CASE("exchange pairs") {
  const auto p = example2_pair();
  CHECK(p.base_strands() == 4);
  CHECK(p.beta1 == parse_braid("n=5; 3 2 1 -4 2 1 3 4"));
  CHECK(p.beta2 == parse_braid("n=5; 3 2 1 4 2 1 3 -4"));
  CHECK(p.reference() == parse_braid("n=5; 3 2 1 4 2 1 3 4"));
  CHECK(p.first_exchange_position() == 3);
  CHECK(p.second_exchange_position() == 7);
  CHECK(exchange_move(p.beta1, 3, 7) == p.beta2);
  CHECK_THROWS_AS(exchange_pair(parse_braid("n=3; 1"), parse_braid("n=4; 1")), std::invalid_argument);

  testing::Gen g(28);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 6);
    const auto pair = exchange_pair(g.word(n, g.uniform(0, 8)), g.word(n, g.uniform(0, 8)));
    CHECK(pair.beta1.strands() == n + 1);
    CHECK(permutation_of(pair.beta1) == permutation_of(pair.beta2));
    CHECK(writhe(pair.beta1) == writhe(pair.beta2));
    CHECK(exchange_move(pair.beta1, pair.first_exchange_position(), pair.second_exchange_position()) == pair.beta2);
    CHECK(pair.reference()[pair.first_exchange_position()] == BraidLetter::pos(n));
    CHECK(pair.reference()[pair.second_exchange_position()] == BraidLetter::pos(n));
  }
}

TEST_CASE("exchange move preconditions") {
  CHECK_THROWS_AS(exchange_move(parse_braid("n=4; 3 1 -3 3"), 0, 2), MoveError);
  CHECK_THROWS_AS(exchange_move(parse_braid("n=4; 3 -1 -3 1"), 0, 1), MoveError);
  CHECK(exchange_move(parse_braid("n=4; 3 1 -3 1"), 0, 2) == parse_braid("n=4; -3 1 3 1"));
  CHECK(exchange_move(parse_braid("n=4; -1 3 1 2"), 0, 2) == parse_braid("n=4; 1 3 -1 2"));
  CHECK_THROWS_AS(exchange_move(parse_braid("n=4; 3 1 3"), 0, 2), MoveError);
  CHECK_THROWS_AS(exchange_move(parse_braid("n=4; 3 1 -3"), 2, 0), MoveError);
}

TEST_CASE("triviality filters") {
  const auto ex2 = triviality_filters(parse_braid("n=4; 3 2 1"), parse_braid("n=4; 2 1 3"));
  CHECK_FALSE(ex2.any());
  CHECK(ex2.reasons().empty());

  const auto avoid = triviality_filters(parse_braid("n=4; 1 2 1"), parse_braid("n=4; 3 2 1"));
  CHECK(avoid.x_avoids_top);
  CHECK_FALSE(avoid.y_avoids_top);
  CHECK(avoid.conjugate_pair());
  CHECK(avoid.reasons().size() == 1);

  const auto even = triviality_filters(parse_braid("n=4; 3 3 2 1"), parse_braid("n=4; 2 -3 -3 1"));
  CHECK(even.even_top_blocks);
  CHECK_FALSE(even.conjugate_pair());
}
