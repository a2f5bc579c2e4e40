/**
 * @file test_qpolys.cpp
 * @brief q-log-convexity checks, polynomial families, the triangle
 *        recurrence criterion and the curvature conditions.
 */

#include "lcx/error.hpp"
#include "lcx/qpolys.hpp"
#include "lcx/transforms.hpp"

#include <doctest.h>

using namespace lcx;

namespace {

Poly P(std::initializer_list<long> v) {
    std::vector<Int> c;
    for (long x : v)
        c.emplace_back(x);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("q_log_convex_check examples") {
    CHECK(q_log_convex_check(gen_poly_seq("q_factorial", 30)).holds());
    PolySeq mv = gen_poly_seq("morgan_voyce", 30);
    CHECK(q_log_convex_check(mv).holds());
    for (std::size_t n = 1; n + 1 < mv.size(); ++n)
        CHECK(q_convexity_difference(mv, n) == P({0, 1}));
    PolySeq bad{{P({1}), P({0, 1}), P({1})}, "constructed"};
    auto r = q_log_convex_check(bad);
    CHECK_FALSE(r.holds());
    CHECK(r.n == 1);
    CHECK(r.power == 2);
    CHECK(r.coefficient == -1);
    CHECK_THROWS_AS(q_log_convex_check(PolySeq{{P({1}), P({1})}, "short"}), lcx::error);
    CHECK_FALSE(q_log_concave_check(bad).holds());
}

TEST_CASE("polynomial families") {
    CHECK(gen_poly_seq("bell", 3)[3] == P({0, 1, 3, 1}));
    CHECK(gen_poly_seq("narayana", 3)[3] == P({0, 1, 3, 1}));
    CHECK(gen_poly_seq("morgan_voyce", 2)[2] == P({1, 3, 1}));
    CHECK(gen_poly_seq("q_factorial", 3)[3] == P({1, 2, 2, 1}));
    CHECK(gen_poly_seq("q_schroder", 3)[3] == P({5, 10, 6, 1}));
    CHECK_THROWS_AS(gen_poly_seq("nosuch", 3), lcx::error);
    PolySeq b = gen_poly_seq("bell", 50);
    PolySeq a = gen_poly_seq("eulerian", 50);
    Seq bell = gen_named("bell", 50);
    for (long n = 0; n <= 50; ++n) {
        auto i = static_cast<std::size_t>(n);
        CHECK(b[i].eval(Rat(1)) == Rat(bell[i]));
        CHECK(a[i].eval(Rat(1)) == Rat(factorial(static_cast<unsigned long>(n))));
        if (n >= 1) {
            CHECK(b[i].degree() == n);
            CHECK(a[i].degree() == n);
        }
    }
    for (auto const& name : poly_family_names())
        CHECK(gen_poly_seq(name, 12).size() == 13);
}

TEST_CASE("Morgan-Voyce difference is exactly q, n <= 500") {
    PolySeq mv = gen_poly_seq("morgan_voyce", 501);
    for (std::size_t n = 1; n <= 500; ++n)
        CHECK(q_convexity_difference(mv, n) == P({0, 1}));
}

TEST_CASE("q-log-convexity of the families at moderate bounds") {
    CHECK(q_log_convex_check(gen_poly_seq("bell", 60)).holds());
    CHECK(q_log_convex_check(gen_poly_seq("eulerian", 60)).holds());
    CHECK(q_log_convex_check(gen_poly_seq("q_schroder", 40)).holds());
    CHECK(q_log_convex_check(gen_poly_seq("q_delannoy", 40)).holds());
    CHECK(q_log_convex_check(gen_poly_seq("narayana", 40)).holds());
    CHECK(q_log_convex_check(row_polys(gen_triangle("narayana", 40))).holds());
}

TEST_CASE("triangle recurrence criterion") {
    TriangleRec s2{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(s2.admissible());
    auto q = thm_T_quantities(s2);
    CHECK(q == std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)});
    CHECK(s2.generate(12).rows == gen_triangle("stirling2", 12).rows);
    CHECK(check_thm_T_qlcx(s2, 60).certified());

    TriangleRec eu{Rat(0), Rat(1), Rat(0), Rat(1), Rat(-1), Rat(1)};
    CHECK(eu.admissible());
    CHECK(thm_T_quantities(eu) == std::array<Rat, 3>{Rat(1), Rat(0), Rat(1)});
    CHECK(eu.generate(12).rows == gen_triangle("eulerian", 12).rows);
    Certificate c = check_thm_T_qlcx(eu, 60);
    CHECK(c.certified());
    CHECK(c.data["condition"] == "n - k + 1");
    Rat q1 = thm_T_quantities(eu)[0];
    for (long n = 1; n <= 30; ++n) {
        for (long k = 1; k <= n; ++k) {
            Rat value = q1 * n + eu.a2 * eu.b2 * k + (eu.a2 * eu.b3 - eu.a3 * eu.b2);
            CHECK(value == n - k + 1);
        }
    }

    TriangleRec other{Rat(0), Rat(1), Rat(0), Rat(0), Rat(2), Rat(0)};
    CHECK(thm_T_quantities(other) == std::array<Rat, 3>{Rat(0), Rat(2), Rat(2)});
    CHECK(check_thm_T_qlcx(other, 30).certified());

    TriangleRec bad{Rat(-1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};
    CHECK_FALSE(bad.admissible());
    CHECK_THROWS_AS(check_thm_T_qlcx(bad, 10), lcx::error);
}

TEST_CASE("curvature tables") {
    Triangle mv = gen_triangle("morgan_voyce", 4);
    CurvatureTable t = curvature_table(mv, 2, 2);
    CHECK(t.values == std::vector<Int>{Int(3), Int(-3)});
    CHECK(t.total() == 0);
    CHECK(t.r == 0);
    Triangle pascal = gen_triangle("binomial", 4);
    CHECK(curvature_table(pascal, 2, 2).values == std::vector<Int>{Int(1), Int(-1)});
    CurvatureTable t0 = curvature_table(pascal, 3, 0);
    CHECK(t0.values.size() == 1);
    CHECK(t0.values[0] == pascal.at(2, 0) * pascal.at(4, 0) - pascal.at(3, 0) * pascal.at(3, 0));
    CHECK_THROWS_AS(curvature_table(pascal, 0, 0), lcx::error);
    CHECK_THROWS_AS(curvature_table(pascal, 2, 5), lcx::error);
    CHECK_THROWS_AS(curvature_table(pascal, 4, 2), lcx::error);
}

TEST_CASE("C2 classification") {
    CurvatureTable ct;
    ct.values = {Int(2), Int(0), Int(-1), Int(-3)};
    CHECK(classify_c2(ct).status == C2Status::holds);
    ct.values = {Int(2), Int(-1), Int(0)};
    CHECK(classify_c2(ct).status == C2Status::weak);
    ct.values = {Int(2), Int(-1), Int(4)};
    auto s = classify_c2(ct);
    CHECK(s.status == C2Status::fails);
    CHECK(s.witness.has_value());
}

TEST_CASE("C1 and C2 for Morgan-Voyce, squared binomials and Narayana") {
    Certificate mv = check_C1_C2(gen_triangle("morgan_voyce", 31), 30);
    CHECK(mv.certified());
    CHECK(mv.data["max_sign_changes"].get<long>() <= 1);
    CHECK(check_C1_C2(gen_triangle("squared_binomial", 21), 20).certified());
    Certificate na = check_C1_C2(gen_triangle("narayana", 21), 20);
    CHECK(na.find("C1")->holds);
    CHECK_FALSE(check_morgan_voyce_tilde(40).has_value());
}

TEST_CASE("transform probes") {
    for (char const* tri : {"morgan_voyce", "narayana", "eulerian", "binomial", "stirling2"}) {
        CAPTURE(tri);
        ProbeReport r = transform_preserves_lcx_probe(tri, 100, 12);
        CHECK(r.failures == 0);
        CHECK(r.corpus_size == 100);
    }
    Seq w = gen_named("catalan", 11);
    CHECK(transform_preserves_lcx_probe("morgan_voyce", 50, 12, 9, w).failures == 0);
}
