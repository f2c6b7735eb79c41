#include "minfill/metric.hpp"
#include "minfill/random_metrics.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace minfill;

TEST_CASE("rational parsing accepts integers, fractions, and decimals") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-3") == Rat(-3));
    CHECK(parse_rational("7/2") == Rat(7) / 2);
    CHECK(parse_rational("1.5") == Rat(3) / 2);
    CHECK(parse_rational("0.25") == Rat(1) / 4);
    CHECK(parse_rational("-2/4") == Rat(-1) / 2);
    CHECK(rat_to_string(parse_rational("1.50")) == "3/2");
    CHECK(rat_to_string(Rat(4) / 2) == "2");
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), DomainError);
}

TEST_CASE("pair_index matches the lexicographic pair order") {
    CHECK(pair_index(1, 2, 4) == 0);
    CHECK(pair_index(3, 4, 4) == 5);

    // Count the pairs preceding (2,4) at n=5 directly.
    int preceding = 0;
    bool seen = false;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            if (i == 2 && j == 4) seen = true;
            if (!seen) ++preceding;
        }
    CHECK(preceding == 5);
    CHECK(pair_index(2, 4, 5) == 5);

    CHECK_THROWS_AS(pair_index(2, 2, 4), DomainError);
    CHECK_THROWS_AS(pair_index(3, 1, 4), DomainError);
    CHECK_THROWS_AS(pair_index(1, 5, 4), DomainError);
}

TEST_CASE("pair_index is strictly increasing and inverts exactly") {
    for (int n = 2; n <= 9; ++n) {
        int expected = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                CHECK(pair_index(i, j, n) == expected);
                CHECK(pair_from_index(expected, n) == std::make_pair(i, j));
                ++expected;
            }
        CHECK(expected == pair_count(n));
    }
}

TEST_CASE("line metric file parses with comments and labels") {
    std::istringstream in(
        "# four points on a line\n"
        "4\n"
        "0 1 2 3\n"
        "1 0 1 2\n"
        "2 1 0 1\n"
        "3 2 1 0\n"
        "labels: a b c d\n");
    MetricSpace m = parse_metric(in, /*strict=*/true);
    CHECK(m.size() == 4);
    CHECK(m.at(1, 3) == 2);
    CHECK(m.at(1, 4) == 3);
    CHECK(m.labels() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("the all-zeros matrix is a valid pseudo-metric even in strict mode") {
    std::istringstream in("3\n0 0 0\n0 0 0\n0 0 0\n");
    MetricSpace m = parse_metric(in, /*strict=*/true);
    CHECK(m.at(1, 2) == 0);
}

TEST_CASE("strict mode reports the violating triple") {
    std::istringstream in("3\n0 1 5\n1 0 1\n5 1 0\n");
    CHECK_THROWS_WITH_AS(parse_metric(in, /*strict=*/true),
                         doctest::Contains("(1,2,3)"), DomainError);
    std::istringstream lax("3\n0 1 5\n1 0 1\n5 1 0\n");
    CHECK(parse_metric(lax, /*strict=*/false).at(1, 3) == 5);
}

TEST_CASE("malformed metric files are rejected") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_metric(in, false), DomainError);
    };
    reject("");
    reject("2\n0 1\n");                    // missing row
    reject("2\n0 1 2\n1 0 3\n");           // too many entries
    reject("2\n0 1\n2 0\n");               // asymmetric
    reject("2\n0 -1\n-1 0\n");             // negative
    reject("2\n1 0\n0 0\n");               // nonzero diagonal
    reject("2\n0 1\n1 0\nextra stuff\n");  // trailing garbage
}

TEST_CASE("JSON metric input matches the text format") {
    MetricSpace m = parse_metric_json(
        R"({"n": 3, "d": ["0", "1/2", "1", "1/2", "0", "3/4", "1", "3/4", "0"],
            "labels": ["x", "y", "z"]})",
        true);
    CHECK(m.at(1, 2) == Rat(1) / 2);
    CHECK(m.at(2, 3) == Rat(3) / 4);
    CHECK(m.labels()[2] == "z");
    CHECK_THROWS_AS(parse_metric_json("{\"n\": 2}", false), DomainError);
    CHECK_THROWS_AS(parse_metric_json("not json", false), DomainError);
}

TEST_CASE("render/parse round-trips exactly on random spaces") {
    std::mt19937_64 rng(4242);
    for (int n = 3; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            MetricSpace m = random_pseudometric(n, rng);
            std::istringstream in(render_metric(m));
            CHECK(parse_metric(in, true) == m);
        }
}
