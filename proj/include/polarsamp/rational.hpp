#ifndef POLARSAMP_RATIONAL_HPP
#define POLARSAMP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polarsamp {

using Rat = mpq_class;
using Int = mpz_class;

inline int sign_of(const Rat& a) { return sgn(a); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

/// Canonical "num/den" form, den always present and positive.
inline std::string rat_to_string(const Rat& a) {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

/// Fixed-point decimal rendering with `digits` fractional digits, truncated toward zero.
inline std::string decimal_string(const Rat& a, unsigned digits) {
    Int num = a.get_num();
    Int den = a.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled = (num * scale) / den;
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string out = ip.get_str();
    if (digits > 0) out += "." + frac;
    if (neg && (ip != 0 || fp != 0)) out.insert(out.begin(), '-');
    return out;
}

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static RatInterval point(const Rat& a) { return {a, a}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    /// 0 if the interval straddles zero, otherwise the common sign.
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }
    RatInterval operator*(const Rat& c) const {
        if (sgn(c) >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }
    RatInterval& operator+=(const RatInterval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
};

}  // namespace polarsamp

#endif
