#include <doctest.h>

#include "hls/errors.hpp"
#include "hls/hcoeff.hpp"
#include "hls/integer.hpp"
#include "hls/qseries.hpp"
#include "oracles.hpp"

using namespace hls;

namespace {

std::uint64_t divisor_count(std::uint64_t n)
{
    std::uint64_t d = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        d += (n % k == 0);
    }
    return d;
}

} // namespace

TEST_CASE("classify examples")
{
    CHECK(classify(1) == RepCounts{1, 0, 1, 0, 1});
    CHECK(classify(6) == RepCounts{6, 1, 0, 0, 2});
    CHECK(classify(144) == RepCounts{144, 1, 1, 0, 3});
    CHECK(classify(120) == RepCounts{120, 2, 0, 0, 4});
    CHECK(classify(50) == RepCounts{50, 0, 0, 1, 1});
    CHECK_THROWS_AS(classify(0), DomainError);
}

TEST_CASE("a_pairs lists the witnesses")
{
    using P = std::pair<std::uint64_t, std::uint64_t>;
    CHECK(a_pairs(6) == std::vector<P>{{2, 1}});
    CHECK(a_pairs(120) == std::vector<P>{{8, 7}, {10, 2}});
    CHECK(a_pairs(50).empty());
    CHECK_THROWS_AS(a_pairs(0), DomainError);
}

TEST_CASE("h_bruteforce examples")
{
    CHECK(h_bruteforce(2) == 1);
    CHECK(h_bruteforce(3) == 0);
    CHECK(h_bruteforce(15) == 2);
    CHECK_THROWS_AS(h_bruteforce(0), DomainError);
}

TEST_CASE("RepCounts invariants for n <= 20000")
{
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        const RepCounts r = classify(n);
        REQUIRE(r.h == 2 * r.a + r.b + r.c);
        REQUIRE(r.b + r.c <= 1);
        REQUIRE(r.h % 2 == (r.b + r.c));
        if (n <= 3000) {
            REQUIRE(r.a <= divisor_count(n));
        }
    }
}

TEST_CASE("divisor criterion equals literal pair counting")
{
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        REQUIRE(classify(n).a == oracle::pair_count_2d(n));
    }
    const auto pairs = oracle::pair_counts_upto(100000);
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        REQUIRE(classify(n).a == pairs[n]);
    }
}

TEST_CASE("classify on large inputs")
{
    // 999983 is prime: 2p^2 has divisors 1, 2, p, 2p, p^2, 2p^2 and none lies
    // strictly between p and sqrt(2) p.
    const std::uint64_t p = 999983;
    CHECK(classify(2 * p * p) == RepCounts{2 * p * p, 0, 0, 1, 1});
    CHECK(classify(p * p) == RepCounts{p * p, 0, 1, 0, 1});
    // p (p + 1): only x = p.
    CHECK(classify(p * (p + 1)).h == 2);
}

TEST_CASE("sieve_h small table")
{
    const CoeffTable t = sieve_h(10);
    const std::vector<std::uint64_t> expected{0, 1, 1, 0, 1, 0, 2, 0, 1, 1, 0};
    CHECK(std::vector<std::uint64_t>(t.values().begin(), t.values().end()) == expected);
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(t[n] == h_bruteforce(n));
    }
    CHECK(sieve_h(1).values().size() == 2);
    CHECK_THROWS_AS(sieve_h(0), PreconditionError);
}

TEST_CASE("sieve_h counts 664 zeros up to 1000")
{
    const CoeffTable t = sieve_h(1000);
    std::uint64_t zeros = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        zeros += (t[n] == 0);
    }
    CHECK(zeros == 664);
}

TEST_CASE("four engines agree for n <= 5000")
{
    const CoeffTable t = sieve_h(5000);
    const Series s = h_series_definition(5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const std::uint64_t h = h_bruteforce(n);
        REQUIRE(classify(n).h == h);
        REQUIRE(t[n] == h);
        REQUIRE(s[n] == h);
    }
}

TEST_CASE("sieve_h is independent of the worker count")
{
    for (std::uint64_t x : {1ULL, 2ULL, 3ULL, 17ULL, 1000ULL, 99991ULL}) {
        const CoeffTable serial = sieve_h(x, 1);
        for (unsigned workers : {2u, 3u, 4u, 7u, 16u}) {
            REQUIRE(sieve_h(x, workers) == serial);
        }
        REQUIRE(sieve_h(x, 0) == serial);
    }
}

TEST_CASE("sieve_h refuses impossible sizes before working")
{
    CHECK_THROWS_AS(sieve_h(~std::uint64_t{0} / 4), ResourceError);
    CHECK_THROWS_AS(sieve_h(std::uint64_t{1} << 50), ResourceError);
}

TEST_CASE("CoeffTable contract")
{
    CHECK_THROWS_AS(CoeffTable(3, {0, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(CoeffTable(1, {5, 1}), PreconditionError);
    const CoeffTable t = sieve_h(100);
    CHECK(t.at(100) == t[100]);
    CHECK_THROWS_AS(t.at(101), PreconditionError);
    CHECK(t.truncated(10) == sieve_h(10));
    CHECK_THROWS_AS(t.truncated(0), PreconditionError);
    CHECK_THROWS_AS(t.truncated(101), PreconditionError);
}
