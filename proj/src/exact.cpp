#include "lcx/exact.hpp"

#include "lcx/error.hpp"

#include <cctype>

namespace lcx {

std::string_view errc_name(errc e) noexcept {
    switch (e) {
    case errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case errc::unknown_sequence: return "UnknownSequence";
    case errc::unknown_triangle: return "UnknownTriangle";
    case errc::unknown_identity: return "UnknownIdentity";
    case errc::unknown_family: return "UnknownFamily";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::offset_mismatch: return "OffsetMismatch";
    case errc::too_short: return "TooShort";
    case errc::zero_term: return "ZeroTerm";
    case errc::non_positive_coefficient: return "NonPositiveCoefficient";
    case errc::non_positive_mu: return "NonPositiveMu";
    case errc::nonlinear_coefficients: return "NonlinearCoefficients";
    case errc::non_constant_coefficients: return "NonConstantCoefficients";
    case errc::inadmissible_recurrence: return "InadmissibleRecurrence";
    case errc::inapplicable: return "Inapplicable";
    case errc::range_error: return "RangeError";
    }
    return "Unknown";
}

Rat make_rat(Int const& num, Int const& den) {
    if (den == 0)
        throw error(errc::range_error, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string const& text) {
    auto valid_int = [](std::string const& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+')
            s.erase(0, 1);
        return s;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw error(errc::parse_error, "not a rational number: '" + text + "'");
    return make_rat(Int(strip_plus(num)), Int(strip_plus(den)));
}

std::strong_ordering rat_cmp(Rat const& a, Rat const& b) {
    int c = cmp(a, b);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow_int(Int const& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string to_string(Int const& x) { return x.get_str(); }
std::string to_string(Rat const& x) { return x.get_str(); }

} // namespace lcx
