#include <doctest.h>

#include <random>

#include "hls/errors.hpp"
#include "hls/hcoeff.hpp"
#include "hls/qseries.hpp"
#include "oracles.hpp"

using namespace hls;

namespace {

Series from_ints(std::initializer_list<long> values)
{
    std::vector<Integer> c;
    for (long v : values) {
        c.emplace_back(v);
    }
    const std::size_t order = c.size() - 1;
    return Series(order, std::move(c));
}

Series from_poly(const oracle::Poly& p)
{
    std::vector<Integer> c;
    for (auto v : p) {
        c.emplace_back(static_cast<long>(v));
    }
    const std::size_t order = c.size() - 1;
    return Series(order, std::move(c));
}

Series random_series(std::mt19937_64& rng, std::size_t order)
{
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= order; ++i) {
        c.emplace_back(dist(rng));
    }
    return Series(order, std::move(c));
}

Series geometric(std::size_t order, std::uint64_t k)
{
    std::vector<Integer> c(order + 1);
    for (std::size_t i = 0; i <= order; i += k) {
        c[i] = 1;
    }
    return Series(order, std::move(c));
}

} // namespace

TEST_CASE("Series construction")
{
    CHECK(Series(3).coeffs().size() == 4);
    CHECK(Series(3).is_zero());
    CHECK_THROWS_AS(Series(2, std::vector<Integer>(2)), PreconditionError);
    CHECK_THROWS_AS(Series(2)[3], PreconditionError);
    CHECK(Series::monomial(3, 5).is_zero());
    CHECK(Series::monomial(3, 2, 7)[2] == 7);
}

TEST_CASE("add")
{
    CHECK(add(from_ints({1, 1}), from_ints({1, -1})) == from_ints({2, 0}));
    const Series s = from_ints({3, -1, 4, 1});
    CHECK(add(s, Series(3)) == s);
    const Series h = h_series_definition(40);
    CHECK(add(h, negate(h)).is_zero());
    CHECK_THROWS_AS(add(Series(2), Series(3)), PreconditionError);
}

TEST_CASE("mul")
{
    CHECK(mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) == from_ints({1, 0, -1}));
    const Series s = from_ints({3, -1, 4, 1, -5});
    CHECK(mul(s, Series::constant(4, 1)) == s);
    CHECK_THROWS_AS(mul(Series(2), Series(3)), PreconditionError);
    for (std::size_t order : {0, 1, 10, 100, 400}) {
        CHECK(mul(euler_inverse(order), euler_product(order)) == Series::constant(order, 1));
    }
}

TEST_CASE("mul_geometric")
{
    CHECK(mul_geometric(Series::constant(6, 1), 1) == from_ints({1, 1, 1, 1, 1, 1, 1}));
    CHECK(mul_geometric(Series::monomial(9, 3), 2) == from_ints({0, 0, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(mul_geometric(Series(4), 0), PreconditionError);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t order = 1 + rng() % 60;
        const std::uint64_t k = 1 + rng() % 10;
        const Series s = random_series(rng, order);
        CHECK(mul_geometric(s, k) == mul(s, geometric(order, k)));
    }
}

TEST_CASE("div_one_plus undoes multiplication by (1 + q^k)")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t order = 1 + rng() % 50;
        const std::uint64_t k = 1 + rng() % 8;
        const Series s = random_series(rng, order);
        const Series factor = add(Series::constant(order, 1), Series::monomial(order, k));
        CHECK(div_one_plus(mul(s, factor), k) == s);
    }
    CHECK_THROWS_AS(div_one_plus(Series(4), 0), PreconditionError);
}

TEST_CASE("inverse")
{
    CHECK(inverse(euler_product(60)) == euler_inverse(60));
    const Series negq = from_poly(oracle::binomial_product(30, +1));
    CHECK(mul(inverse(negq), negq) == Series::constant(30, 1));
    CHECK_THROWS_AS(inverse(from_ints({2, 1})), PreconditionError);
    CHECK_THROWS_AS(inverse(Series(3)), PreconditionError);
}

TEST_CASE("euler_inverse gives partition numbers")
{
    CHECK(euler_inverse(6) == from_ints({1, 1, 2, 3, 5, 7, 11}));
    CHECK(euler_inverse(0)[0] == 1);
    const Series p = euler_inverse(30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(p[n] == oracle::partition_count(n));
    }
    // Exact beyond 64 bits: p(500) has 22 digits.
    CHECK(euler_inverse(500)[500].get_str() == "2300165032574323995027");
}

TEST_CASE("euler_product matches the direct product")
{
    CHECK(euler_product(7) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(euler_product(7) == from_poly(oracle::binomial_product(7, -1)));
    CHECK(euler_product(80) == from_poly(oracle::binomial_product(80, -1)));
    CHECK(euler_product(5)[0] == 1);
    CHECK(euler_product(5)[2] == -1);
}

TEST_CASE("pochhammer_negq matches the direct product")
{
    CHECK(pochhammer_negq(4) == from_ints({1, 1, 1, 2, 2}));
    CHECK(pochhammer_negq(60) == from_poly(oracle::binomial_product(60, +1)));
    CHECK(pochhammer_negq(3)[0] == 1);
    CHECK(pochhammer_negq(3)[1] == 1);
}

TEST_CASE("h(q) by its defining sum")
{
    const Series expected = from_ints({0, 1, 1, 0, 1, 0, 2, 0, 1, 1});
    CHECK(h_series_definition(9) == expected);
    for (std::uint64_t n = 1; n <= 9; ++n) {
        CHECK(expected[n] == h_bruteforce(n));
    }
    CHECK(h_series_definition(9)[3] == 0);
    CHECK(h_series_definition(9)[6] == 2);
    CHECK(h_series_definition(0) == Series(0));
}

TEST_CASE("h(q) by the Hecke-type double sum")
{
    CHECK(h_series_hecke(9) == h_series_definition(9));
    CHECK(h_series_hecke(9)[1] == 1);
    CHECK(h_series_hecke(9)[2] == 1);
}

TEST_CASE("h(q) by the pair/square/double-square representation")
{
    CHECK(h_series_representation(9) == h_series_definition(9));
    CHECK(h_series_representation(9)[4] == 1);
    CHECK(h_series_representation(9)[8] == 1);
}

TEST_CASE("h(q) engines agree and are nonnegative up to order 2000")
{
    const Series def = h_series_definition(2000);
    CHECK(def == h_series_hecke(2000));
    CHECK(def == h_series_representation(2000));
    for (const auto& c : def.coeffs()) {
        REQUIRE(sgn(c) >= 0);
    }
    // Truncation boundaries: each engine's cutoff must be right at every order.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = rng() % 300;
        const Series d = h_series_definition(order);
        CHECK(d == h_series_hecke(order));
        CHECK(d == h_series_representation(order));
    }
}

TEST_CASE("sigma(q) by its defining sum")
{
    const Series s = sigma_series_definition(1700);
    CHECK(s[0] == 1);
    CHECK(s[1] == 1);
    CHECK(s[2] == -1);
    CHECK(s[3] == 2);
    CHECK(s[45] == 4);
    CHECK(s[1609] == 6);
}

TEST_CASE("sigma(q) coefficients count distinct-part partitions by rank parity")
{
    const Series s = sigma_series_definition(45);
    for (int n = 0; n <= 45; ++n) {
        CHECK(s[n] == oracle::distinct_rank_parity(n));
    }
}

TEST_CASE("sigma(q) by the Hecke-type double sum")
{
    CHECK(sigma_series_hecke(50) == sigma_series_definition(50));
    CHECK(sigma_series_hecke(50)[0] == 1);
    CHECK(sigma_series_hecke(50)[45] == 4);
    CHECK(sigma_series_hecke(2000) == sigma_series_definition(2000));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = rng() % 300;
        CHECK(sigma_series_hecke(order) == sigma_series_definition(order));
    }
}

TEST_CASE("crank-moment series, partition kind")
{
    const Series c = crank_series(CrankKind::partition, 30);
    CHECK(c[0] == 0);
    CHECK(c[1] == 1);
    for (int n = 0; n <= 30; ++n) {
        std::int64_t conv = 0;
        for (int k = 1; k <= n; ++k) {
            conv += oracle::partition_count(n - k) * static_cast<std::int64_t>(h_bruteforce(k));
        }
        CHECK(c[n] == conv);
    }
    // The combinatorial meaning: sum over positive cranks (n >= 2).
    for (int n = 2; n <= 25; ++n) {
        CHECK(c[n] == oracle::first_positive_crank_moment(n));
    }
}

TEST_CASE("crank-moment series, overpartition kind")
{
    constexpr std::size_t order = 24;
    oracle::Poly h(order + 1, 0);
    for (std::size_t n = 1; n <= order; ++n) {
        h[n] = static_cast<std::int64_t>(h_bruteforce(n));
    }
    oracle::Poly partitions(order + 1, 0);
    for (std::size_t n = 0; n <= order; ++n) {
        partitions[n] = oracle::partition_count(static_cast<int>(n));
    }
    const auto expected =
        oracle::poly_mul(oracle::poly_mul(partitions, oracle::binomial_product(order, +1)), h);
    CHECK(crank_series(CrankKind::overpartition, order) == from_poly(expected));
    // Order 3 by hand: (1+q+2q^2+3q^3)(1+q+q^2+2q^3) = 1+2q+4q^2+8q^3, times q+q^2.
    CHECK(crank_series(CrankKind::overpartition, 3) == from_ints({0, 1, 3, 6}));
}

TEST_CASE("ring laws at fixed order")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = rng() % 40;
        const Series a = random_series(rng, order);
        const Series b = random_series(rng, order);
        const Series c = random_series(rng, order);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Series::constant(order, 1) == a);
        CHECK(a - a == Series(order));
    }
}

TEST_CASE("series names")
{
    for (auto name : {SeriesName::h_def, SeriesName::h_hecke, SeriesName::h_rep,
                      SeriesName::sigma_def, SeriesName::sigma_hecke, SeriesName::crank_p,
                      SeriesName::crank_op}) {
        CHECK(parse_series_name(to_string(name)) == name);
    }
    CHECK_THROWS_AS(parse_series_name("theta"), DomainError);
    CHECK(generate(SeriesName::h_rep, 20) == h_series_representation(20));
}
