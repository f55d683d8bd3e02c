#include <doctest.h>

#include <vector>

#include "braidinv/error.hpp"
#include "braidinv/families.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/json.hpp"
#include "braidinv/morton.hpp"
#include "braidinv/qinv.hpp"
#include "generators.hpp"

using namespace braidinv;

namespace {

// Random word with exactly s singular letters.
BraidWord singular_word(testing::Gen& g, int n, int length, int s) {
  std::vector<BraidLetter> letters;
  for (int k = 0; k < length; ++k) letters.push_back(g.letter(n));
  std::vector<int> slots(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) slots[static_cast<std::size_t>(k)] = k;
  std::shuffle(slots.begin(), slots.end(), g.engine());
  for (int k = 0; k < s; ++k) {
    auto& l = letters[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])];
    l = BraidLetter::sing(l.index);
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace

TEST_CASE("truncation order") {
  CHECK(default_truncation_order(0) == 2);
  CHECK(default_truncation_order(1) == 2);
  CHECK(default_truncation_order(5) == 5);
  // An order below k is raised to k.
  CHECK(q_invariant(parse_braid("1 1 1"), 3, 1) == q_invariant(parse_braid("1 1 1"), 3));
  CHECK_THROWS_AS(q_invariant(parse_braid("1 1 1"), -1), std::invalid_argument);
}

TEST_CASE("trefoil invariants of order zero and one") {
  const auto w = parse_braid("1 1 1");
  CHECK(q_invariant(w, 0) == RationalPoly{{0, -2}, {2, 1}});
  CHECK(q_invariant(w, 1) == RationalPoly{{0, 6}, {2, 3}});
  CHECK(q_invariant(w, 1, 6) == q_invariant(w, 1));
  const auto s = series_of(w, 3);
  CHECK(s.coefficient(1) == q_invariant(w, 1));
}

TEST_CASE("order zero sees only the closure in the annulus") {
  // At a = 1 every crossing becomes e_i + 1, independent of its sign.
  testing::Gen g(61);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 5);
    const auto w = g.word(n, g.uniform(0, 8));
    std::vector<BraidLetter> flipped(w.letters().begin(), w.letters().end());
    for (auto& l : flipped)
      if (g.coin()) l = l.inverse();
    CHECK(q_invariant(w, 0) == q_invariant(BraidWord(n, flipped), 0));
  }
}

TEST_CASE("invariance under conjugation, randomized") {
  testing::Gen g(62);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 5);
    const auto w = g.knot(n, 1, 8);
    const auto c = conjugate(w, g.word(n, g.uniform(1, 3)));
    const auto lhs = series_of(w, 2), rhs = series_of(c, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("singular letters carry the factor a^-1 - a") {
  testing::Gen g(63);
  for (int s = 1; s <= 4; ++s)
    for (int trial = 0; trial < 125; ++trial) {
      const int n = g.uniform(2, 5);
      const auto w = singular_word(g, n, g.uniform(s, s + 5), s);
      CAPTURE(w.to_string());
      const auto u = singular_phi(w);
      CHECK(divisible_by_singular_factor(u, s));
      CHECK(vanishing_order_check(w));
    }
  CHECK_THROWS_AS(vanishing_order_check(parse_braid("1 1 1")), DomainError);
  CHECK_FALSE(divisible_by_singular_factor(phi(parse_braid("1")), 1));
}

TEST_CASE("singular image is the signed sum over resolutions") {
  const auto w = parse_braid("n=3; S1 2 S2");
  const auto expected = phi(parse_braid("n=3; 1 2 2")) - phi(parse_braid("n=3; 1 2 -2")) -
                        phi(parse_braid("n=3; -1 2 2")) + phi(parse_braid("n=3; -1 2 -2"));
  CHECK(singular_phi(w) == expected);
  CHECK(singular_phi(parse_braid("n=3; 1 -2")) == phi(parse_braid("n=3; 1 -2")));
}

TEST_CASE("exchange delta: direct against factored, randomized") {
  testing::Gen g(64);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(1, 4);
    const auto x = n == 1 ? BraidWord(1) : g.word(n, g.uniform(0, 5));
    const auto y = n == 1 ? BraidWord(1) : g.word(n, g.uniform(0, 5));
    CHECK(exchange_delta(exchange_pair(x, y)).agree());
  }
}

TEST_CASE("q differences: direct against delta, randomized") {
  testing::Gen g(65);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.uniform(2, 4);
    const auto pair = exchange_pair(g.word(n, g.uniform(0, 5)), g.word(n, g.uniform(0, 5)));
    const int k = g.uniform(0, 3);
    CHECK(q_difference(pair, k).agree());
  }
}

TEST_CASE("conjugate exchange pairs have equal invariants") {
  testing::Gen g(66);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = g.uniform(3, 4);
    auto x = g.word(n, g.uniform(1, 5));
    auto y = g.word(n - 1, g.uniform(0, 5)).embedded(n);
    if (g.coin()) std::swap(x, y);
    const auto pair = exchange_pair(x, y);
    REQUIRE(triviality_filters(pair.x, pair.y).conjugate_pair());
    for (int k = 0; k <= 2; ++k) CHECK(q_difference(pair, k).direct.is_zero());
  }
}

TEST_CASE("exchange family with a twisted middle strand") {
  for (int j = 1; j <= 5; ++j) {
    CAPTURE(j);
    const auto pair = example1_pair(j);
    CHECK(q_difference(pair, 0).direct.is_zero());
    CHECK(q_difference(pair, 1).direct.is_zero());
    const auto d2 = q_difference(pair, 2);
    CHECK(d2.agree());
    CHECK(d2.direct == RationalPoly{{1, 64 * j}, {3, -16 * j}});
  }
  CHECK(q_difference(example1_pair(0), 2).direct.is_zero());
}

TEST_CASE("the unknot pair") {
  const auto b1 = morton_beta1(), b2 = morton_beta2();
  CHECK(q_invariant(b1, 1) - q_invariant(b2, 1) == RationalPoly{{0, 16}, {2, -4}});
  // Both close to the unknot; order zero sees the same closure.
  CHECK(q_invariant(b1, 0) == q_invariant(b2, 0));
  const auto p = morton_pair();
  CHECK(p.beta1 == flip(b1));
  CHECK(p.beta2 == flip(b2));
  CHECK(q_difference(p, 1).direct == RationalPoly{{0, 16}, {2, -4}});
}

TEST_CASE("scan is deterministic and independent of the thread count") {
  ScanConfig cfg;
  cfg.n = 4;
  cfg.length = 5;
  cfg.samples = 40;
  cfg.seed = 7;
  cfg.injected = {{example1_pair(1).x, example1_pair(1).y}, {example2_pair().x, example2_pair().y}};
  cfg.threads = 1;
  const auto one = conjecture_scan(cfg);
  cfg.threads = 3;
  const auto three = conjecture_scan(cfg);
  REQUIRE(one.records.size() == 42);
  REQUIRE(three.records.size() == 42);
  for (std::size_t k = 0; k < one.records.size(); ++k) {
    CHECK(nlohmann::json(one.records[k]) == nlohmann::json(three.records[k]));
    CHECK(one.records[k].index == k);
  }
  CHECK(nlohmann::json(one.summary) == nlohmann::json(three.summary));
  CHECK(one.records[0].source == "include");
  CHECK(one.records[2].source == "random");
  CHECK(one.records[0].agreement());
  CHECK(one.records[1].agreement());
  CHECK_FALSE(one.records[1].fiedler_diff_zero);
  CHECK(one.summary.records == 42);
  CHECK(one.summary.agreements + one.summary.disagreements == one.summary.accepted);
  CHECK(one.summary.counterexamples.size() == one.summary.disagreements);

  for (const auto& r : one.records) {
    if (!r.accepted || r.source != "random") continue;
    CHECK(is_knot(exchange_pair(r.x, r.y).beta1));
    CHECK_FALSE(triviality_filters(r.x, r.y).any());
    CHECK(r.x.size() == 5);
  }
}

TEST_CASE("scan seeds") {
  CHECK(sample_seed(1, 0) != sample_seed(1, 1));
  CHECK(sample_seed(1, 5) == sample_seed(1, 5));
  CHECK(sample_seed(1, 5) != sample_seed(2, 5));
  ScanConfig cfg;
  cfg.samples = 0;
  const auto empty = conjecture_scan(cfg);
  CHECK(empty.records.empty());
  CHECK(empty.summary.records == 0);
}

TEST_CASE("scan records survive a JSON round trip") {
  ScanConfig cfg;
  cfg.samples = 25;
  cfg.seed = 3;
  cfg.threads = 1;
  const auto report = conjecture_scan(cfg);
  for (const auto& r : report.records) {
    const nlohmann::json j = r;
    const auto back = j.get<ScanRecord>();
    CHECK(nlohmann::json(back) == j);
    CHECK(back.x == r.x);
    CHECK(back.y == r.y);
    CHECK(back.sample_seed == r.sample_seed);
    const auto line = scan_record_line(r, cfg);
    CHECK(line.at("schema") == json_schema_version);
  }
  const nlohmann::json s = report.summary;
  CHECK(nlohmann::json(s.get<ScanSummary>()) == s);
  CHECK(scan_summary_line(report).at("schema") == json_schema_version);
}

TEST_CASE("rational polynomial JSON") {
  const RationalPoly p{{-1, Rational(3, 2)}, {2, -4}};
  const nlohmann::json j = p;
  CHECK(j.dump() == R"({"-1":"3/2","2":-4})");
  CHECK(j.get<RationalPoly>() == p);
}
