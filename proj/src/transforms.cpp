#include "lcx/transforms.hpp"

#include "lcx/convexity.hpp"
#include "lcx/error.hpp"

#include <algorithm>
#include <random>

namespace lcx {

namespace {

void require_compatible(Seq const& x, Seq const& y) {
    if (x.size() != y.size())
        throw error(errc::length_mismatch,
                    "lengths differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x.offset != y.offset || x.stride != y.stride)
        throw error(errc::offset_mismatch, "offsets differ: " + std::to_string(x.offset) + " vs " +
                                               std::to_string(y.offset));
}

Seq like(Seq const& x, std::string name) {
    Seq out;
    out.offset = x.offset;
    out.stride = x.stride;
    out.name = std::move(name);
    return out;
}

} // namespace

Seq componentwise_sum(Seq const& x, Seq const& y) {
    require_compatible(x, y);
    Seq out = like(x, x.name + "+" + y.name);
    out.values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out.values.push_back(x[i] + y[i]);
    return out;
}

Seq binomial_convolution(Seq const& x, Seq const& y) {
    require_compatible(x, y);
    Seq out = like(x, "binconv(" + x.name + "," + y.name + ")");
    std::vector<Int> row{1};
    for (std::size_t n = 0; n < x.size(); ++n) {
        Int s = 0;
        for (std::size_t k = 0; k <= n; ++k)
            s += row[k] * x[k] * y[n - k];
        out.values.push_back(s);
        row.push_back(1);
        for (std::size_t k = n; k >= 1; --k)
            row[k] += row[k - 1];
    }
    return out;
}

Seq ordinary_convolution(Seq const& x, Seq const& y) {
    require_compatible(x, y);
    Seq out = like(x, "conv(" + x.name + "," + y.name + ")");
    for (std::size_t n = 0; n < x.size(); ++n) {
        Int s = 0;
        for (std::size_t k = 0; k <= n; ++k)
            s += x[k] * y[n - k];
        out.values.push_back(s);
    }
    return out;
}

Seq triangle_transform(Triangle const& t, Seq const& x) {
    if (x.size() < t.num_rows())
        throw error(errc::length_mismatch, "sequence has " + std::to_string(x.size()) + " terms, triangle has " +
                                               std::to_string(t.num_rows()) + " rows");
    Seq out = like(x, t.name + "(" + x.name + ")");
    for (std::size_t n = 0; n < t.num_rows(); ++n) {
        Int s = 0;
        auto const& row = t.rows[n];
        for (std::size_t k = 0; k < row.size(); ++k)
            s += row[k] * x[k];
        out.values.push_back(s);
    }
    return out;
}

Seq named_transform(std::string_view triangle, Seq const& x) {
    if (x.size() == 0)
        throw error(errc::too_short, "empty sequence");
    return triangle_transform(gen_triangle(triangle, static_cast<long>(x.size()) - 1), x);
}

Seq binomial_transform(Seq const& x) { return named_transform("binomial", x); }
Seq stirling2_transform(Seq const& x) { return named_transform("stirling2", x); }
Seq stirling1_transform(Seq const& x) { return named_transform("stirling1", x); }
Seq morgan_voyce_transform(Seq const& x) { return named_transform("morgan_voyce", x); }
Seq narayana_transform(Seq const& x) { return named_transform("narayana", x); }
Seq eulerian_transform(Seq const& x) { return named_transform("eulerian", x); }

// ----------------------------------------------------------------- corpora

namespace {

std::vector<Seq> ratio_corpus(std::size_t count, std::size_t len, std::uint64_t seed, bool increasing,
                              char const* tag) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> denom(1, 4);
    std::uniform_int_distribution<long> numer(1, 12);
    std::uniform_int_distribution<long> first(1, 5);
    std::vector<Seq> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        long q = denom(rng);
        std::vector<long> p(len > 0 ? len - 1 : 0);
        for (auto& v : p)
            v = numer(rng);
        if (increasing)
            std::sort(p.begin(), p.end());
        else
            std::sort(p.begin(), p.end(), std::greater<>());
        // z_n = z_0 * p_0 ... p_{n-1} * Q^(len-1-n), so z_{n+1}/z_n = p_n / Q
        Seq z;
        z.name = std::string(tag) + "_" + std::to_string(s);
        Int prod = first(rng);
        for (std::size_t n = 0; n < len; ++n) {
            z.values.push_back(prod * pow_int(Int(q), static_cast<unsigned long>(len - 1 - n)));
            if (n < p.size())
                prod *= p[n];
        }
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace

std::vector<Seq> log_convex_corpus(std::size_t count, std::size_t len, std::uint64_t seed) {
    return ratio_corpus(count, len, seed, true, "lcx");
}

std::vector<Seq> log_concave_corpus(std::size_t count, std::size_t len, std::uint64_t seed) {
    return ratio_corpus(count, len, seed, false, "lcv");
}

std::optional<std::pair<Seq, Seq>> find_ordinary_convolution_counterexample(long max_term, std::size_t len) {
    if (len < 3)
        throw error(errc::too_short, "need length >= 3");
    // enumerate all sequences with terms in 1..max_term, keep the log-convex ones
    std::vector<Seq> pool;
    std::vector<long> digits(len, 1);
    while (true) {
        Seq s;
        for (long d : digits)
            s.values.emplace_back(d);
        if (is_log_convex(s).holds())
            pool.push_back(std::move(s));
        std::size_t i = len;
        while (i > 0 && digits[i - 1] == max_term)
            digits[--i] = 1;
        if (i == 0)
            break;
        ++digits[i - 1];
    }
    for (auto const& x : pool)
        for (auto const& y : pool)
            if (!is_log_convex(ordinary_convolution(x, y)).holds())
                return std::pair{x, y};
    return std::nullopt;
}

} // namespace lcx
