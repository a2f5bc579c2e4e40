/**
 * @file test_poly.cpp
 * @brief Polynomial arithmetic: examples, ring properties and the
 *        Kronecker product against schoolbook multiplication.
 */

#include "lcx/poly.hpp"

#include <doctest.h>

#include <random>

using namespace lcx;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t max_len, long bound) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<Int> v(len(rng));
    for (auto& x : v)
        x = c(rng);
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("poly examples") {
    Poly one_q{Int(1), Int(1)};
    Poly q3{Int(1), Int(1), Int(1)};
    CHECK(poly_mul(one_q, q3) == Poly{Int(1), Int(2), Int(2), Int(1)});
    CHECK(poly_sub(q3, q3).is_zero());
    CHECK(poly_sub(q3, q3).degree() == -1);
    Poly n3{Int(0), Int(1), Int(3), Int(1)};
    CHECK(poly_compose_affine(n3, Int(1)) == Poly{Int(5), Int(10), Int(6), Int(1)});
    CHECK(poly_derivative(n3) == Poly{Int(1), Int(6), Int(3)});
    CHECK(poly_eval(n3, make_rat(1, 2)) == make_rat(1, 2) + make_rat(3, 4) + make_rat(1, 8));
    CHECK(n3.to_string() == "q + 3q^2 + q^3");
}

TEST_CASE("coeffs_nonneg") {
    CHECK(coeffs_nonneg(Poly{Int(1), Int(2), Int(0), Int(1)}).nonneg);
    auto r = coeffs_nonneg(Poly{Int(0), Int(1), Int(-1)});
    CHECK_FALSE(r.nonneg);
    CHECK(r.first_negative_power == 2);
    Poly a0{Int(1)}, a1{Int(1), Int(1)}, a2{Int(1), Int(3), Int(1)};
    Poly d = a0 * a2 - a1 * a1;
    CHECK(d == Poly{Int(0), Int(1)});
    CHECK(coeffs_nonneg(d).nonneg);
}

TEST_CASE("exact_divide") {
    Poly p{Int(2), Int(4), Int(6)};
    CHECK(p.exact_divide(Int(2)));
    CHECK(p == Poly{Int(1), Int(2), Int(3)});
    CHECK_FALSE(p.exact_divide(Int(2)));
    CHECK(p == Poly{Int(1), Int(2), Int(3)});
}

TEST_CASE("Kronecker multiplication matches schoolbook") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 60, i % 2 ? 1000000 : 5);
        Poly b = random_poly(rng, 60, i % 3 ? 1000000000 : 3);
        CHECK(a * b == multiply_schoolbook(a, b));
    }
    // huge coefficients
    Poly big{pow_int(Int(10), 80), -pow_int(Int(7), 90), Int(1), Int(-1), Int(3), Int(5), Int(8), Int(13),
             Int(21), Int(34), Int(55), Int(89), Int(144), pow_int(Int(3), 100)};
    CHECK(big * big == multiply_schoolbook(big, big));
}

TEST_CASE("ring properties and evaluation homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(rng, 20, 50);
        Poly g = random_poly(rng, 20, 50);
        Poly h = random_poly(rng, 20, 50);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        Rat x = make_rat(Int(static_cast<long>(i) - 50), Int(7));
        CHECK(poly_eval(f * g, x) == poly_eval(f, x) * poly_eval(g, x));
        CHECK(poly_eval(poly_compose_affine(f, Int(3)), x) == poly_eval(f, x + 3));
    }
}
