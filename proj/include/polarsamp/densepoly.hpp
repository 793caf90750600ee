#ifndef POLARSAMP_DENSEPOLY_HPP
#define POLARSAMP_DENSEPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "polarsamp/rational.hpp"
#include "polarsamp/upoly.hpp"

namespace polarsamp {

/// Exponent vector, one entry per variable. std::vector's lexicographic
/// compare gives the lex term order with X1 most significant.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q. Terms are kept in a map ordered
/// lex ascending, so the lex leading term is terms().rbegin().
class DensePoly {
public:
    DensePoly() : nvars_(0) {}
    explicit DensePoly(int nvars) : nvars_(nvars) {}

    static DensePoly constant(int nvars, const Rat& a);
    static DensePoly variable(int nvars, int j);  // 0-based
    static DensePoly term(int nvars, Monomial m, const Rat& a);
    static DensePoly from_upoly(int nvars, int j, const UPoly& p);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for zero
    int degree_in(int j) const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;  // lex
    const Rat& leading_coeff() const;
    Rat coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Rat& a);

    DensePoly operator-() const;
    DensePoly operator+(const DensePoly& o) const;
    DensePoly operator-(const DensePoly& o) const;
    DensePoly operator*(const DensePoly& o) const;
    DensePoly operator*(const Rat& a) const;
    bool operator==(const DensePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    DensePoly partial_derivative(int j) const;  // 0-based

    Rat eval(const std::vector<Rat>& point) const;
    /// Substitute each variable by a polynomial (all of the same variable count).
    DensePoly eval_poly(const std::vector<DensePoly>& subs) const;
    /// Substitute each variable by a univariate polynomial, reducing mod q.
    UPoly eval_upoly_mod(const std::vector<UPoly>& subs, const UPoly& q) const;
    RatInterval eval_interval(const std::vector<RatInterval>& box) const;

    /// Content = gcd of numerators / lcm of denominators, signed so the lex
    /// leading coefficient stays positive.
    Rat content() const;
    DensePoly primitive_part() const;

    bool is_univariate_in(int j) const;
    UPoly to_upoly(int j) const;

    /// Drop variable j (which must not occur) from the exponent vectors.
    DensePoly drop_variable(int j) const;
    /// Insert a fresh unused variable at position j.
    DensePoly insert_variable(int j) const;

    /// Graded-lex descending rendering with variables x1..xn.
    std::string to_string() const;

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;
};

/// Exact division; throws std::domain_error if g does not divide f.
DensePoly exact_div(const DensePoly& f, const DensePoly& g);
/// Primitive gcd, positive lex-leading coefficient; gcd(0,0) = 0.
DensePoly gcd(const DensePoly& f, const DensePoly& g);
/// f divided by gcd(f, df/dx1, ..., df/dxn).
DensePoly squarefree_part(const DensePoly& f);

}  // namespace polarsamp

#endif
