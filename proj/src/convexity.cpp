#include "lcx/convexity.hpp"

#include "lcx/error.hpp"

namespace lcx {

std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::holds_from_index: return "holds_from_index";
    }
    return "unknown";
}

namespace {

enum class Dir { convex, concave };

CheckReport adjacent_check(Seq const& z, Dir dir, bool strict) {
    if (z.size() < 3)
        throw error(errc::too_short, "need at least 3 terms, got " + std::to_string(z.size()));
    CheckReport r;
    r.range_lo = z.index_of(0);
    r.range_hi = z.index_of(z.size() - 1);
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
        Int lhs = z[i - 1] * z[i + 1];
        Int rhs = z[i] * z[i];
        int c = cmp(lhs, rhs);
        bool ok = dir == Dir::convex ? (strict ? c > 0 : c >= 0) : (strict ? c < 0 : c <= 0);
        if (!ok) {
            r.status = CheckStatus::fails;
            std::string rel = dir == Dir::convex ? (strict ? ">" : ">=") : (strict ? "<" : "<=");
            r.first_violation = Violation{{z.index_of(i - 1), z.index_of(i), z.index_of(i + 1)},
                                          std::move(lhs), std::move(rhs), rel};
            break;
        }
    }
    return r;
}

} // namespace

CheckReport is_log_convex(Seq const& z, bool strict) { return adjacent_check(z, Dir::convex, strict); }

CheckReport is_log_concave(Seq const& z, bool strict) { return adjacent_check(z, Dir::concave, strict); }

Seq tail_from(Seq const& z, long from) {
    Seq out;
    out.name = z.name;
    out.stride = z.stride;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z.index_of(i) >= from) {
            if (out.values.empty())
                out.offset = z.index_of(i);
            out.values.push_back(z[i]);
        }
    }
    if (out.values.empty())
        out.offset = from;
    return out;
}

Monotone RatioReport::verdict() const {
    if (increasing && decreasing)
        return Monotone::both;
    if (increasing)
        return Monotone::increasing;
    if (decreasing)
        return Monotone::decreasing;
    return Monotone::neither;
}

RatioReport ratio_sequence(Seq const& z) {
    RatioReport r;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] <= 0)
            throw error(errc::zero_term, "term at index " + std::to_string(z.index_of(i)) + " is not positive");
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        r.ratios.push_back(make_rat(z[i + 1], z[i]));
    for (std::size_t i = 0; i + 1 < r.ratios.size(); ++i) {
        if (r.ratios[i + 1] < r.ratios[i])
            r.increasing = false;
        if (r.ratios[i + 1] > r.ratios[i])
            r.decreasing = false;
    }
    return r;
}

SR2Report sr2_window_check(Seq const& z, long window) {
    if (window < 2 || window > static_cast<long>(z.size()))
        throw error(errc::too_short, "window must satisfy 2 <= window <= length");
    SR2Report rep;
    for (CheckReport* r : {&rep.convex_side, &rep.concave_side}) {
        r->range_lo = z.index_of(0);
        r->range_hi = z.index_of(static_cast<std::size_t>(window - 1));
    }
    auto record = [&](CheckReport& r, long k, long m, long n, Int const& lhs, Int const& rhs, char const* rel) {
        if (r.status == CheckStatus::fails)
            return;
        r.status = CheckStatus::fails;
        r.first_violation = Violation{{z.index_of(static_cast<std::size_t>(m - k)), z.index_of(static_cast<std::size_t>(m)),
                                       z.index_of(static_cast<std::size_t>(n)), z.index_of(static_cast<std::size_t>(n + k))},
                                      lhs, rhs, rel};
    };
    // positions: 1 <= k <= m <= n, n + k < window
    for (long m = 1; m < window; ++m) {
        for (long n = m; n < window; ++n) {
            for (long k = 1; k <= m && n + k < window; ++k) {
                Int lhs = z[static_cast<std::size_t>(m)] * z[static_cast<std::size_t>(n)];
                Int rhs = z[static_cast<std::size_t>(m - k)] * z[static_cast<std::size_t>(n + k)];
                if (lhs > rhs)
                    record(rep.convex_side, k, m, n, lhs, rhs, "<=");
                if (lhs < rhs)
                    record(rep.concave_side, k, m, n, lhs, rhs, ">=");
            }
        }
    }
    if (rep.convex_side.holds())
        rep.sign_pair = std::pair{1, 1};
    else if (rep.concave_side.holds())
        rep.sign_pair = std::pair{1, -1};
    return rep;
}

CheckReport is_tp2_triangle(Triangle const& t, long rows) {
    if (rows < 1 || rows >= static_cast<long>(t.num_rows()))
        throw error(errc::too_short, "triangle has " + std::to_string(t.num_rows()) + " rows, asked for 0.." +
                                         std::to_string(rows));
    CheckReport r;
    r.range_lo = 0;
    r.range_hi = rows;
    for (long i1 = 0; i1 <= rows; ++i1)
        for (long i2 = i1 + 1; i2 <= rows; ++i2)
            for (long j1 = 0; j1 <= i2; ++j1)
                for (long j2 = j1 + 1; j2 <= i2; ++j2) {
                    Int lhs = t.at(i1, j1) * t.at(i2, j2);
                    Int rhs = t.at(i1, j2) * t.at(i2, j1);
                    if (lhs < rhs) {
                        r.status = CheckStatus::fails;
                        r.first_violation = Violation{{i1, i2, j1, j2}, lhs, rhs, ">="};
                        return r;
                    }
                }
    return r;
}

Seq bisection(Seq const& z, Parity parity) {
    if (z.size() < 2)
        throw error(errc::too_short, "need at least 2 terms");
    long want = parity == Parity::even ? 0 : 1;
    Seq out;
    out.name = z.name + (parity == Parity::even ? "_even" : "_odd");
    bool first = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
        long idx = z.index_of(i);
        if (((idx % 2) + 2) % 2 != want)
            continue;
        if (first) {
            out.offset = idx;
            first = false;
        }
        out.values.push_back(z[i]);
    }
    out.stride = z.stride * 2;
    if (z.stride % 2 == 0 && !out.values.empty())
        out.stride = z.stride;
    return out;
}

TailReport find_logconvex_tail(Seq const& z) {
    if (z.size() < 3)
        throw error(errc::too_short, "need at least 3 terms");
    TailReport r;
    r.start_index = z.index_of(0);
    r.checked_to = z.index_of(z.size() - 1);
    for (std::size_t i = 1; i + 1 < z.size(); ++i)
        if (z[i - 1] * z[i + 1] < z[i] * z[i])
            r.start_index = z.index_of(i);
    return r;
}

} // namespace lcx
