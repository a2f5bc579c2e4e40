/**
 * @file test_convexity.cpp
 * @brief Log-convexity predicates, ratio and SR2 views, TP2 triangles,
 *        bisection and tails.
 */

#include "lcx/convexity.hpp"
#include "lcx/error.hpp"
#include "lcx/transforms.hpp"

#include <doctest.h>

#include <random>

using namespace lcx;

namespace {

Seq seq(std::initializer_list<long> v, long offset = 0) {
    Seq s;
    for (long x : v)
        s.values.emplace_back(x);
    s.offset = offset;
    return s;
}

// All-pairs inequality a_m a_n <= a_{m-k} a_{n+k} (or >=), brute force.
bool general_inequality(Seq const& z, bool convex) {
    long len = static_cast<long>(z.size());
    for (long m = 1; m < len; ++m)
        for (long n = m; n < len; ++n)
            for (long k = 1; k <= m && n + k < len; ++k) {
                Int lhs = z.values[static_cast<std::size_t>(m)] * z.values[static_cast<std::size_t>(n)];
                Int rhs = z.values[static_cast<std::size_t>(m - k)] * z.values[static_cast<std::size_t>(n + k)];
                if (convex ? lhs > rhs : lhs < rhs)
                    return false;
            }
    return true;
}

} // namespace

TEST_CASE("is_log_convex examples") {
    CHECK(is_log_convex(seq({1, 1, 2, 4, 9, 21, 51})).status == CheckStatus::holds);
    auto fib = is_log_convex(seq({1, 1, 2, 3, 5, 8}));
    REQUIRE(fib.status == CheckStatus::fails);
    CHECK(fib.first_violation->indices == std::vector<long>{1, 2, 3});
    CHECK(fib.first_violation->lhs == 3);
    CHECK(fib.first_violation->rhs == 4);
    CHECK(is_log_convex(seq({5, 5, 5})).holds());
    CHECK_FALSE(is_log_convex(seq({5, 5, 5}), true).holds());
    CHECK_THROWS_AS(is_log_convex(seq({1, 2})), lcx::error);
}

TEST_CASE("is_log_concave examples") {
    CHECK(is_log_concave(seq({1, 4, 6, 4, 1})).holds());
    CHECK(is_log_concave(seq({1, 3, 8, 21})).holds());
    auto r = is_log_concave(seq({1, 1, 2}));
    REQUIRE_FALSE(r.holds());
    CHECK(r.first_violation->indices == std::vector<long>{0, 1, 2});
}

TEST_CASE("Fibonacci alternates with exact (-1)^n witnesses") {
    Seq f = gen_named("fibonacci", 40);
    for (long k = 1; k + 1 <= 40; ++k) {
        Int d = f[static_cast<std::size_t>(k - 1)] * f[static_cast<std::size_t>(k + 1)] -
                f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(k)];
        CHECK(d == (k % 2 ? 1 : -1));
    }
    CHECK_FALSE(is_log_convex(f).holds());
    CHECK_FALSE(is_log_concave(f).holds());
    CHECK(is_log_concave(f).first_violation->indices == std::vector<long>{0, 1, 2});
}

TEST_CASE("offsets are kept in witnesses") {
    Seq z = seq({3, 1, 1, 2, 4}, 5);
    auto r = is_log_convex(z);
    CHECK(r.holds());
    Seq y = seq({1, 2, 3, 5}, 10);
    CHECK(is_log_convex(y).first_violation->indices == std::vector<long>{10, 11, 12});
}

TEST_CASE("ratio_sequence") {
    auto c = ratio_sequence(seq({1, 1, 2, 5, 14}));
    CHECK(c.ratios == std::vector<Rat>{Rat(1), Rat(2), make_rat(5, 2), make_rat(14, 5)});
    CHECK(c.verdict() == Monotone::increasing);
    auto b = ratio_sequence(seq({1, 2, 6, 20}));
    CHECK(b.ratios == std::vector<Rat>{Rat(2), Rat(3), make_rat(10, 3)});
    CHECK(ratio_sequence(seq({3, 3, 3})).verdict() == Monotone::both);
    CHECK_THROWS_AS(ratio_sequence(seq({1, 0, 1})), lcx::error);
}

TEST_CASE("sr2_window_check") {
    CHECK(sr2_window_check(gen_named("motzkin", 11), 12).sign_pair == std::pair<int, int>{1, 1});
    CHECK(sr2_window_check(seq({1, 6, 15, 20, 15, 6, 1}), 7).sign_pair == std::pair<int, int>{1, -1});
    CHECK_FALSE(sr2_window_check(gen_named("fibonacci", 11), 12).sign_pair.has_value());
}

TEST_CASE("is_tp2_triangle") {
    CHECK(is_tp2_triangle(gen_triangle("binomial", 30), 30).holds());
    CHECK(is_tp2_triangle(gen_triangle("stirling2", 20), 20).holds());
    Triangle t = gen_triangle("binomial", 6);
    t.rows[2][1] = -2;
    auto r = is_tp2_triangle(t, 6);
    CHECK_FALSE(r.holds());
    CHECK(r.first_violation.has_value());
}

TEST_CASE("bisection") {
    Seq f = gen_named("fibonacci", 9);
    Seq even = bisection(f, Parity::even);
    CHECK(even.values == seq({1, 2, 5, 13, 34}).values);
    CHECK(even.stride == 2);
    CHECK(is_log_convex(even).holds());
    Seq odd = bisection(f, Parity::odd);
    CHECK(odd.values == seq({1, 3, 8, 21, 55}).values);
    CHECK(odd.offset == 1);
    CHECK(is_log_concave(odd).holds());
    CHECK(is_log_concave(bisection(gen_named("pell", 20), Parity::odd)).holds());
    Seq le = bisection(gen_named("lucas", 5), Parity::even);
    CHECK(le.values == seq({1, 4, 11}).values);
    CHECK(is_log_concave(le).holds());
    // witnesses carry original indices
    Seq z = seq({1, 0, 1, 0, 5, 0, 1});
    auto r = is_log_convex(bisection(z, Parity::even));
    REQUIRE_FALSE(r.holds());
    CHECK(r.first_violation->indices == std::vector<long>{2, 4, 6});
}

TEST_CASE("find_logconvex_tail") {
    CHECK(find_logconvex_tail(seq({1, 0, 1, 2, 6, 18, 57})).start_index == 2);
    CHECK(find_logconvex_tail(seq({1, 0, 1, 2, 9, 44})).start_index == 2);
    CHECK(find_logconvex_tail(gen_named("motzkin", 30)).start_index == 0);
    CHECK(find_logconvex_tail(gen_named("fine", 300)).start_index == 2);
    CHECK(tail_from(gen_named("fine", 10), 2).values == gen_named("fine_shifted", 8).values);
}

TEST_CASE("equivalence of adjacent, ratio and SR2 views") {
    std::vector<Seq> pool;
    for (auto const& name : catalogue_names()) {
        Seq z = gen_named(name, 14);
        bool positive = true;
        for (auto const& v : z.values)
            positive = positive && v > 0;
        if (positive)
            pool.push_back(z);
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> val(1, 30);
    for (auto const& s : log_convex_corpus(70, 12, 17))
        pool.push_back(s);
    for (auto const& s : log_concave_corpus(70, 12, 18))
        pool.push_back(s);
    for (int i = 0; i < 60; ++i) {
        Seq s;
        for (int j = 0; j < 12; ++j)
            s.values.emplace_back(val(rng));
        pool.push_back(s);
    }
    CHECK(pool.size() >= 200);
    for (auto const& z : pool) {
        bool adjacent = is_log_convex(z).holds();
        auto ratio = ratio_sequence(z);
        auto sr2 = sr2_window_check(z, static_cast<long>(z.size()));
        CHECK(adjacent == ratio.increasing);
        CHECK(adjacent == (sr2.sign_pair && sr2.sign_pair->second == 1));
        CHECK(adjacent == general_inequality(z, true));
        CHECK(is_log_concave(z).holds() == general_inequality(z, false));
    }
}
