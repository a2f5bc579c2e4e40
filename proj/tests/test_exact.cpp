/**
 * @file test_exact.cpp
 * @brief Rationals, quadratic surds and exact sign determination, with a
 *        100-digit decimal oracle for the sign tests.
 */

#include "lcx/error.hpp"
#include "lcx/exact.hpp"
#include "lcx/surd.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

#include <random>

using namespace lcx;
using big = boost::multiprecision::cpp_dec_float_100;

namespace {

big to_big(Rat const& r) { return big(r.get_num().get_str()) / big(r.get_den().get_str()); }

// Oracle value of sum t_i sqrt(m_i).
big oracle(std::vector<std::pair<Rat, long>> const& terms) {
    big s = 0;
    for (auto const& [t, m] : terms)
        s += to_big(t) * boost::multiprecision::sqrt(big(m));
    return s;
}

int oracle_sign(big const& v) {
    if (boost::multiprecision::abs(v) < big("1e-80"))
        return 0;
    return v > 0 ? 1 : -1;
}

} // namespace

TEST_CASE("rat_cmp examples") {
    CHECK(rat_cmp(make_rat(3, 2), make_rat(3, 2)) == std::strong_ordering::equal);
    CHECK(rat_cmp(make_rat(22, 7), make_rat(26, 8)) == std::strong_ordering::less);
    CHECK(rat_cmp(make_rat(-1, 3), Rat(0)) == std::strong_ordering::less);
}

TEST_CASE("rat_cmp agrees with cross multiplication and is transitive") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rat a = make_rat(num(rng), den(rng));
        Rat b = make_rat(num(rng), den(rng));
        Rat c = make_rat(num(rng), den(rng));
        Int cross = a.get_num() * b.get_den() - b.get_num() * a.get_den();
        auto ab = rat_cmp(a, b);
        CHECK((ab < 0) == (cross < 0));
        CHECK((ab == 0) == (cross == 0));
        CHECK((rat_cmp(b, a) < 0) == (ab > 0));
        if (ab <= 0 && rat_cmp(b, c) <= 0)
            CHECK(rat_cmp(a, c) <= 0);
    }
}

TEST_CASE("make_rat and parse_rat") {
    Rat r = make_rat(Int(6), Int(-4));
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(parse_rat("-7/21") == make_rat(-1, 3));
    CHECK(parse_rat("12") == Rat(12));
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), lcx::error);
    CHECK_THROWS_AS(parse_rat("1/0"), lcx::error);
    CHECK_THROWS_AS(parse_rat("abc"), lcx::error);
}

TEST_CASE("integer helpers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(pow_int(Int(3), 40) == Int("12157665459056928801"));
}

TEST_CASE("split_square") {
    auto s = split_square(Int(72));
    CHECK(s.square_root == 6);
    CHECK(s.remainder == 2);
    CHECK(split_square(Int(49)).remainder == 1);
    CHECK(split_square(Int(1) << 61).remainder == 2);
}

TEST_CASE("QuadSurd normalization folds perfect squares") {
    // (b + sqrt(b^2)) / (2a) is rational
    for (long a = 1; a < 6; ++a) {
        for (long b = 1; b < 9; ++b) {
            QuadSurd s = QuadSurd::make(make_rat(b, 2 * a), make_rat(1, 2 * a), Rat(b * b));
            CHECK(s.is_rational());
            CHECK(s.rational_part() == make_rat(b, a));
        }
    }
    QuadSurd t = QuadSurd::make(Rat(0), Rat(1), Rat(8));
    CHECK(t.radicand() == 2);
    CHECK(t.surd_coefficient() == 2);
    QuadSurd u = QuadSurd::make(Rat(0), Rat(1), make_rat(1, 2));
    CHECK(u.radicand() == 2);
    CHECK(u.surd_coefficient() == make_rat(1, 2));
    CHECK_THROWS_AS(QuadSurd::make(Rat(0), Rat(1), Rat(-3)), lcx::error);
}

TEST_CASE("surd_sign examples") {
    SurdExpr e = SurdExpr(Rat(1)) + SurdExpr::term(Rat(1), Int(2)) - SurdExpr(make_rat(5, 2));
    CHECK(e.sign() == -1);
    SurdExpr f = SurdExpr::term(Rat(1), Int(2)) * SurdExpr::term(Rat(1), Int(8)) - SurdExpr(Rat(4));
    CHECK(f.sign() == 0);
    CHECK(f.is_zero());
    QuadSurd lam = QuadSurd::make(make_rat(5, 8), make_rat(1, 8), Rat(73));
    CHECK((lam.expr() - SurdExpr(Rat(1))).sign() == 1);
}

TEST_CASE("algebraic zeros across different radicands") {
    // sqrt(6) - sqrt(2) sqrt(3)
    SurdExpr a = SurdExpr::term(Rat(1), Int(6)) - SurdExpr::term(Rat(1), Int(2)) * SurdExpr::term(Rat(1), Int(3));
    CHECK(a.is_zero());
    // sqrt(12) - 2 sqrt(3) + sqrt(50) - 5 sqrt(2)
    SurdExpr b = SurdExpr::term(Rat(1), Int(12)) - SurdExpr::term(Rat(2), Int(3)) + SurdExpr::term(Rat(1), Int(50)) -
                 SurdExpr::term(Rat(5), Int(2));
    CHECK(b.sign() == 0);
    // (sqrt 2 + sqrt 3)^2 - 5 - 2 sqrt 6
    SurdExpr s = SurdExpr::term(Rat(1), Int(2)) + SurdExpr::term(Rat(1), Int(3));
    CHECK((s * s - SurdExpr(Rat(5)) - SurdExpr::term(Rat(2), Int(6))).is_zero());
}

TEST_CASE("near cancellation is decided exactly") {
    // sqrt(10^12 + 1) - 10^6 ~ 5e-7
    Int m = pow_int(Int(10), 12) + 1;
    SurdExpr e = SurdExpr::term(Rat(1), m) - SurdExpr(Rat(pow_int(Int(10), 6)));
    CHECK(e.sign() == 1);
    // sqrt(2) - 665857/470832 (a convergent, off by ~1.6e-12)
    SurdExpr g = SurdExpr::term(Rat(1), Int(2)) - SurdExpr(make_rat(665857, 470832));
    CHECK(g.sign() == -1);
    SurdExpr h = SurdExpr::term(Rat(1), Int(2)) + SurdExpr::term(Rat(1), Int(3)) -
                 SurdExpr::term(Rat(1), Int(10)) + SurdExpr(make_rat(1, 1000000000));
    CHECK(h.sign() == oracle_sign(oracle({{Rat(1), 2}, {Rat(1), 3}, {Rat(-1), 10}}) + big("1e-9")));
}

TEST_CASE("surd_sign agrees with a 100-digit oracle on 1000 random expressions") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), rad(1, 60), count(1, 4);
    int zeros = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::pair<Rat, long>> terms;
        long k = count(rng);
        for (long j = 0; j < k; ++j)
            terms.emplace_back(make_rat(num(rng), den(rng)), rad(rng));
        SurdExpr e;
        for (auto const& [t, m] : terms)
            e += SurdExpr::term(t, Int(m));
        int expected = oracle_sign(oracle(terms));
        zeros += expected == 0;
        INFO("expression " << e.to_string());
        CHECK(e.sign() == expected);
        CHECK(e.is_zero() == (expected == 0));
    }
    MESSAGE("random expressions that vanished: " << zeros);
    // Exact cancellations: t sqrt(m) - (t/2) sqrt(4m) + s - s.
    for (long i = 1; i <= 20; ++i) {
        Rat t = make_rat(num(rng) + 41, den(rng));
        long m = rad(rng);
        SurdExpr e = SurdExpr::term(t, Int(m)) - SurdExpr::term(t / 2, Int(4 * m)) + SurdExpr(Rat(i)) - SurdExpr(Rat(i));
        CHECK(e.is_zero());
        CHECK(e.sign() == 0);
    }
}

TEST_CASE("QuadSurd comparisons agree with the oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9), rad(2, 90);
    for (int i = 0; i < 300; ++i) {
        QuadSurd a = QuadSurd::make(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)), Rat(rad(rng)));
        QuadSurd b = QuadSurd::make(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)), Rat(rad(rng)));
        big va = to_big(a.rational_part()) + to_big(a.surd_coefficient()) * boost::multiprecision::sqrt(big(a.radicand().get_str()));
        big vb = to_big(b.rational_part()) + to_big(b.surd_coefficient()) * boost::multiprecision::sqrt(big(b.radicand().get_str()));
        int expected = oracle_sign(va - vb);
        auto c = compare(a, b);
        CHECK((c < 0) == (expected < 0));
        CHECK((c == 0) == (expected == 0));
        CHECK(a.sign() == oracle_sign(va));
        Rat r = make_rat(num(rng), den(rng));
        auto cr = compare(a, r);
        CHECK((cr > 0) == (oracle_sign(va - to_big(r)) > 0));
    }
}
