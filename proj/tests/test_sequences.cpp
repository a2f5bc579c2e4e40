/**
 * @file test_sequences.cpp
 * @brief Catalogue generators against closed forms and independent
 *        routes, triangles, and the spec-file parser.
 */

#include "lcx/error.hpp"
#include "lcx/sequences.hpp"

#include <doctest.h>

using namespace lcx;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

std::vector<Int> prefix(std::string_view name, long n, Convention c = Convention::catalogue) {
    return gen_named(name, n, c).values;
}

Int catalan(long n) { return binomial(2 * n, n) / (n + 1); }

} // namespace

TEST_CASE("catalogue prefixes") {
    CHECK(prefix("motzkin", 6) == ints({1, 1, 2, 4, 9, 21, 51}));
    CHECK(prefix("fine", 6) == ints({1, 0, 1, 2, 6, 18, 57}));
    CHECK(prefix("fine_shifted", 3) == ints({1, 2, 6, 18}));
    CHECK(prefix("delannoy", 4) == ints({1, 3, 13, 63, 321}));
    CHECK(prefix("little_schroder", 4) == ints({1, 1, 3, 11, 45}));
    CHECK(prefix("large_schroder", 4) == ints({1, 2, 6, 22, 90}));
    CHECK(prefix("derangements", 6) == ints({1, 0, 1, 2, 9, 44, 265}));
    CHECK(prefix("derangements_shifted", 3) == ints({1, 2, 9, 44}));
    CHECK(prefix("directed_animals", 6) == ints({1, 1, 2, 5, 13, 35, 96}));
    CHECK(prefix("polyhexes", 5) == ints({1, 1, 3, 10, 36, 137}));
    CHECK(prefix("cubic_walks", 3) == ints({1, 4, 17, 76}));
    CHECK(prefix("euler", 7) == ints({1, 1, 1, 2, 5, 16, 61, 272}));
    CHECK(prefix("bell", 5) == ints({1, 1, 2, 5, 15, 52}));
    CHECK(prefix("ordered_bell", 4) == ints({1, 1, 3, 13, 75}));
    CHECK(prefix("two_colored_bell", 4) == ints({1, 2, 6, 22, 94}));
    CHECK(prefix("central_binomial", 4) == ints({1, 2, 6, 20, 70}));
    CHECK(prefix("catalan", 5) == ints({1, 1, 2, 5, 14, 42}));
    CHECK(prefix("factorial", 5) == ints({1, 1, 2, 6, 24, 120}));
    CHECK(prefix("fibonacci", 5) == ints({1, 1, 2, 3, 5, 8}));
    CHECK(prefix("lucas", 5) == ints({1, 3, 4, 7, 11, 18}));
    CHECK(prefix("lucas", 3, Convention::classical) == ints({2, 1, 3, 4}));
    CHECK(prefix("pell", 4) == ints({1, 2, 5, 12, 29}));
    CHECK(prefix("pell", 3, Convention::classical) == ints({0, 1, 2, 5}));
    CHECK_THROWS_AS(gen_named("nosuch", 3), lcx::error);
}

TEST_CASE("every catalogue name generates") {
    for (auto const& name : catalogue_names()) {
        CAPTURE(name);
        CHECK(gen_named(name, 30).values.size() == 31);
    }
}

TEST_CASE("closed forms against recurrences, n <= 500") {
    auto cat = prefix("catalan", 500);
    auto cb = prefix("central_binomial", 500);
    auto big = prefix("large_schroder", 500);
    auto little = prefix("little_schroder", 500);
    for (long n = 0; n <= 500; ++n) {
        auto i = static_cast<std::size_t>(n);
        CHECK(cat[i] == catalan(n));
        CHECK(cb[i] == binomial(2 * n, n));
        if (n >= 1)
            CHECK(big[i] == 2 * little[i]);
    }
}

TEST_CASE("independent formulas for the recurrence sequences, n <= 150") {
    auto motz = prefix("motzkin", 150);
    auto del = prefix("delannoy", 150);
    auto der = prefix("derangements", 150);
    auto fine = prefix("fine", 150);
    auto sch = prefix("large_schroder", 150);
    auto da = prefix("directed_animals", 150);
    for (long n = 0; n <= 150; ++n) {
        auto i = static_cast<std::size_t>(n);
        Int m = 0, d = 0, s = 0, t = 0;
        for (long k = 0; 2 * k <= n; ++k)
            m += binomial(n, 2 * k) * catalan(k);
        for (long k = 0; k <= n; ++k) {
            d += binomial(n, k) * binomial(n + k, k);
            s += binomial(n + k, n - k) * catalan(k);
        }
        // directed animals: A_n = sum_{k<n} binom(n-1,k) binom(k, floor(k/2)) for n >= 1
        for (long k = 0; k < n; ++k)
            t += binomial(n - 1, k) * binomial(k, k / 2);
        CHECK(da[i] == (n == 0 ? Int(1) : t));
        CHECK(motz[i] == m);
        CHECK(del[i] == d);
        CHECK(sch[i] == s);
        // derangements: d_n = n d_{n-1} + (-1)^n
        if (n >= 1)
            CHECK(der[i] == Int(n) * der[i - 1] + (n % 2 ? -1 : 1));
        // Catalan / Fine relation C_n = 2 f_n + f_{n-1}
        if (n >= 1)
            CHECK(catalan(n) == 2 * fine[i] + fine[i - 1]);
    }
}

TEST_CASE("cubic walks and polyhexes against generating-function oracles") {
    auto w = prefix("cubic_walks", 80);
    auto h = prefix("polyhexes", 80);
    // w_n = sum_k binom(n,2k) 4^(n-2k) C_k
    for (long n = 0; n <= 80; ++n) {
        Int s = 0;
        for (long k = 0; 2 * k <= n; ++k)
            s += binomial(n, 2 * k) * pow_int(Int(4), static_cast<unsigned long>(n - 2 * k)) * catalan(k);
        CHECK(w[static_cast<std::size_t>(n)] == s);
    }
    // h_0 = 1, h_n = g_{n-1} with g = 1 + 3x g + x^2 g^2
    std::vector<Int> g{1};
    for (long n = 1; n < 80; ++n) {
        Int s = 3 * g[static_cast<std::size_t>(n - 1)];
        for (long i = 0; i <= n - 2; ++i)
            s += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(n - 2 - i)];
        g.push_back(s);
    }
    CHECK(h[0] == 1);
    for (long n = 1; n <= 80; ++n)
        CHECK(h[static_cast<std::size_t>(n)] == g[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("Bell routes and Fibonacci identities") {
    CHECK(gen_named("bell", 200).values == bell_by_binomial_recurrence(200).values);
    CHECK(gen_named("euler", 120).values == euler_by_convolution(120).values);
    auto f = prefix("fibonacci", 1002);
    // F_0 = F_1 = 1 here, so F_{n-1}F_{n+1} - F_n^2 = (-1)^(n+1) in this indexing
    for (std::size_t n = 1; n + 1 < f.size(); ++n)
        CHECK(f[n - 1] * f[n + 1] - f[n] * f[n] == (n % 2 ? -1 : 1) * -1);
    for (std::size_t n = 2; n + 2 < f.size(); ++n)
        CHECK(f[n - 2] * f[n + 2] - f[n] * f[n] == (n % 2 ? -1 : 1));
}

TEST_CASE("recurrence unrolling examples") {
    Recurrence3 m;
    m.alpha = RatPoly{Rat(3), Rat(1)};
    m.beta = RatPoly{Rat(3), Rat(2)};
    m.gamma = RatPoly{Rat(0), Rat(3)};
    m.initial = {Rat(1), Rat(1)};
    auto t = gen_from_recurrence3(m, 6);
    CHECK(t.integral);
    CHECK(t.to_seq().values == ints({1, 1, 2, 4, 9, 21, 51}));
    Recurrence3 h = m;
    h.alpha = RatPoly{Rat(1), Rat(1)};
    h.beta = RatPoly{Rat(3)};
    h.gamma = RatPoly{Rat(2), Rat(2)};
    h.initial = {Rat(1), Rat(4)};
    auto r = gen_from_recurrence3(h, 5);
    CHECK_FALSE(r.integral);
    CHECK(r.values[5] == make_rat(244, 5));
    CHECK_THROWS_AS(r.to_seq(), lcx::error);
}

TEST_CASE("triangles") {
    CHECK(gen_triangle("stirling2", 4).rows[4] == ints({0, 1, 7, 6, 1}));
    CHECK(gen_triangle("narayana", 3).rows[3] == ints({0, 1, 3, 1}));
    CHECK(gen_triangle("morgan_voyce", 2).rows[2] == ints({1, 3, 1}));
    CHECK(gen_triangle("binomial", 4).rows[4] == ints({1, 4, 6, 4, 1}));
    CHECK(gen_triangle("squared_binomial", 3).rows[3] == ints({1, 9, 9, 1}));
    CHECK(gen_triangle("stirling1", 4).rows[4] == ints({0, 6, 11, 6, 1}));
    CHECK(gen_triangle("eulerian", 3).rows[3] == ints({0, 1, 4, 1}));
    CHECK(gen_triangle("stirling1", 25).rows == stirling1_by_summation(25).rows);
    CHECK_THROWS_AS(gen_triangle("nosuch", 3), lcx::error);
    Triangle s2 = gen_triangle("stirling2", 12);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(s2.at(n, k) == Int(k) * s2.at(n - 1, k) + s2.at(n - 1, k - 1));
    CHECK(s2.at(3, 7) == 0);
    CHECK(s2.at(40, 2) == 0);
}

TEST_CASE("spec parsing") {
    auto spec = parse_seq_spec(
        R"({"kind":"recurrence3","sign":"minus","alpha":[2,1],"beta":[3,6],"gamma":[-1,1],"initial":[1,1],"start":1})");
    auto const& r = std::get<Recurrence3>(spec);
    CHECK(r.sign == RecSign::minus);
    CHECK(r.a(3) == 5);
    CHECK(r.b(3) == 21);
    CHECK(r.c(1) == 0);
    CHECK(spec_terms(spec, 4).values == ints({1, 1, 3, 11, 45}));

    auto named = parse_seq_spec(R"({"kind":"named","name":"motzkin"})");
    CHECK(std::get<NamedRequest>(named).name == "motzkin");
    CHECK(spec_recurrence(named).name == "motzkin");

    SUBCASE("missing initial") {
        try {
            parse_seq_spec(R"({"kind":"recurrence3","sign":"plus","alpha":[1],"beta":[1],"gamma":[1]})");
            FAIL("expected a parse error");
        } catch (lcx::error const& e) {
            CHECK(e.kind() == errc::parse_error);
            CHECK(std::string(e.what()).find("initial") != std::string::npos);
        }
    }
    SUBCASE("syntax error reports the line") {
        try {
            parse_seq_spec("{\n  \"kind\": \"named\",\n  \"name\" \"motzkin\"\n}");
            FAIL("expected a parse error");
        } catch (lcx::error const& e) {
            CHECK(e.kind() == errc::parse_error);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("validation") {
        char const* bad = R"({"kind":"recurrence3","sign":"plus","alpha":[5,-1],"beta":[1],"gamma":[1],"initial":[1,1]})";
        try {
            parse_seq_spec(bad);
            FAIL("expected a validation error");
        } catch (lcx::error const& e) {
            CHECK(e.kind() == errc::validation_error);
        }
        CHECK_NOTHROW(parse_seq_spec(bad, false));
    }
    SUBCASE("rational coefficients") {
        auto s = parse_seq_spec(R"({"kind":"recurrence3","sign":"plus","alpha":["3/2"],"beta":[1],"gamma":[1],"initial":[1,1]})");
        CHECK(std::get<Recurrence3>(s).a(7) == make_rat(3, 2));
    }
}

TEST_CASE("recurrence_to_json round trip") {
    for (auto const& name : catalogue_names()) {
        if (!has_catalogue_recurrence(name))
            continue;
        CAPTURE(name);
        Recurrence3 r = catalogue_recurrence(name);
        auto back = std::get<Recurrence3>(parse_seq_spec(recurrence_to_json(r), false));
        CHECK(back.alpha == r.alpha);
        CHECK(back.beta == r.beta);
        CHECK(back.gamma == r.gamma);
        CHECK(back.sign == r.sign);
        CHECK(back.initial == r.initial);
        CHECK(back.start == r.start);
        CHECK(back.offset == r.offset);
        CHECK(gen_from_recurrence3(back, 20).values == gen_from_recurrence3(r, 20).values);
    }
}
