#ifndef POLARSAMP_UPOLY_HPP
#define POLARSAMP_UPOLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "polarsamp/rational.hpp"

namespace polarsamp {

/// Univariate polynomial over Q, coefficients stored in ascending degree.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

    static UPoly constant(const Rat& a);
    static UPoly variable();           // X
    static UPoly monomial(unsigned k); // X^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& lc() const { return c_.back(); }
    Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& a) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    UPoly monic() const;

    Rat eval(const Rat& x) const;
    RatInterval eval_interval(const RatInterval& x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// Exact division; throws if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& a);

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& q);

/// Resultant via the Sylvester matrix.
Rat resultant(const UPoly& a, const UPoly& b);
/// disc(q) = (-1)^{m(m-1)/2} res(q, q') / lc(q).
Rat discriminant(const UPoly& q);

/// 1 + max |a_i| / |a_m|: all real roots lie in (-bound, bound).
Rat cauchy_root_bound(const UPoly& q);

}  // namespace polarsamp

#endif
