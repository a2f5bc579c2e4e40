#include "lcx/poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace lcx {

namespace {

// Below this operand length the schoolbook product wins.
constexpr std::size_t kKroneckerThreshold = 12;

std::size_t max_bits(std::vector<Int> const& c) {
    std::size_t b = 0;
    for (auto const& x : c)
        b = std::max<std::size_t>(b, mpz_sizeinbase(x.get_mpz_t(), 2));
    return b;
}

// Packs nonnegative coefficients into one integer, `slot` limbs apiece.
Int pack(std::vector<Int> const& c, std::size_t slot) {
    Int out;
    std::size_t total = c.size() * slot;
    if (total == 0)
        return out;
    mp_limb_t* w = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
    std::memset(w, 0, total * sizeof(mp_limb_t));
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t n = mpz_size(c[i].get_mpz_t());
        if (n)
            std::memcpy(w + i * slot, mpz_limbs_read(c[i].get_mpz_t()), n * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
    return out;
}

std::vector<Int> unpack(Int const& v, std::size_t slot, std::size_t count) {
    std::vector<Int> out(count);
    std::size_t n = mpz_size(v.get_mpz_t());
    mp_limb_t const* r = mpz_limbs_read(v.get_mpz_t());
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t lo = i * slot;
        if (lo >= n)
            break;
        std::size_t len = std::min(slot, n - lo);
        mp_limb_t* w = mpz_limbs_write(out[i].get_mpz_t(), static_cast<mp_size_t>(len));
        std::memcpy(w, r + lo, len * sizeof(mp_limb_t));
        mpz_limbs_finish(out[i].get_mpz_t(), static_cast<mp_size_t>(len));
    }
    return out;
}

// Product of coefficient vectors with nonnegative entries.
std::vector<Int> kronecker_nonneg(std::vector<Int> const& a, std::vector<Int> const& b) {
    if (a.empty() || b.empty())
        return {};
    std::size_t len_bits = mpz_sizeinbase(Int(static_cast<unsigned long>(std::min(a.size(), b.size()))).get_mpz_t(), 2);
    std::size_t bits = max_bits(a) + max_bits(b) + len_bits + 1;
    std::size_t slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    Int prod = pack(a, slot) * pack(b, slot);
    return unpack(prod, slot, a.size() + b.size() - 1);
}

void split_signs(std::vector<Int> const& c, std::vector<Int>& pos, std::vector<Int>& neg) {
    pos.assign(c.size(), 0);
    neg.assign(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] > 0)
            pos[i] = c[i];
        else if (c[i] < 0)
            neg[i] = -c[i];
    }
}

bool all_zero(std::vector<Int> const& c) {
    return std::all_of(c.begin(), c.end(), [](Int const& x) { return x == 0; });
}

template <typename T>
std::vector<T> schoolbook(std::vector<T> const& a, std::vector<T> const& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<T> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

template <>
Poly Poly::multiply(Poly const& a, Poly const& b) {
    if (std::min(a.size(), b.size()) < kKroneckerThreshold)
        return Poly(schoolbook(a.c_, b.c_));
    std::vector<Int> ap, an, bp, bn;
    split_signs(a.c_, ap, an);
    split_signs(b.c_, bp, bn);
    std::vector<Int> out = kronecker_nonneg(ap, bp);
    out.resize(a.size() + b.size() - 1);
    auto accumulate = [&](std::vector<Int> const& x, std::vector<Int> const& y, int s) {
        if (all_zero(x) || all_zero(y))
            return;
        auto p = kronecker_nonneg(x, y);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (s > 0)
                out[i] += p[i];
            else
                out[i] -= p[i];
        }
    };
    accumulate(an, bn, 1);
    accumulate(ap, bn, -1);
    accumulate(an, bp, -1);
    return Poly(std::move(out));
}

template <>
RatPoly RatPoly::multiply(RatPoly const& a, RatPoly const& b) {
    return RatPoly(schoolbook(a.c_, b.c_));
}

Poly multiply_schoolbook(Poly const& a, Poly const& b) {
    return Poly(schoolbook(a.coeffs(), b.coeffs()));
}

template <>
bool Poly::exact_divide(Int const& s) {
    for (auto const& x : c_)
        if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t()))
            return false;
    for (auto& x : c_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return true;
}

template <>
bool RatPoly::exact_divide(Rat const& s) {
    if (s == 0)
        return false;
    for (auto& x : c_)
        x /= s;
    return true;
}

template <typename T>
std::string basic_poly<T>::to_string(char var) const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        T mag = c_[i] < 0 ? T(-c_[i]) : c_[i];
        if (first)
            os << (c_[i] < 0 ? "-" : "");
        else
            os << (c_[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

template std::string basic_poly<Int>::to_string(char) const;
template std::string basic_poly<Rat>::to_string(char) const;

RatPoly to_rat_poly(Poly const& p) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (auto const& x : p.coeffs())
        c.emplace_back(x);
    return RatPoly(std::move(c));
}

NonnegReport coeffs_nonneg(Poly const& f) {
    NonnegReport r;
    auto const& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) {
            r.nonneg = false;
            r.first_negative_power = static_cast<long>(i);
            break;
        }
    }
    return r;
}

} // namespace lcx
