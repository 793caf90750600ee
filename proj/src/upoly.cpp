#include "polarsamp/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polarsamp {

void UPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rat& a) {
    UPoly p;
    if (a != 0) p.c_ = {a};
    return p;
}

UPoly UPoly::variable() { return monomial(1); }

UPoly UPoly::monomial(unsigned k) {
    UPoly p;
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = 1;
    return p;
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.normalize();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.normalize();
    return r;
}

UPoly UPoly::operator*(const Rat& a) const {
    UPoly r(*this);
    for (auto& x : r.c_) x *= a;
    r.normalize();
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<unsigned long>(i);
    r.normalize();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / lc());
}

Rat UPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

RatInterval UPoly::eval_interval(const RatInterval& x) const {
    RatInterval v = RatInterval::point(Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + RatInterval::point(*it);
    return v;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            os << mag.get_num().get_str();
            if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> r(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    const Rat& lb = b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact univariate division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly f = a, g = b;
    while (!g.is_zero()) {
        UPoly r = rem(f, g);
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

UPoly squarefree_part(const UPoly& a) {
    if (a.is_zero() || a.degree() == 0) return a;
    return exact_div(a, gcd(a, a.derivative()));
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& q) { return rem(a * b, q); }

Rat resultant(const UPoly& a, const UPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    // Sylvester matrix, rows of a then rows of b.
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + j] = a.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + j] = b.coeff(n - j);
    // Fraction Gaussian elimination.
    Rat det = 1;
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (s[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (s[r][col] == 0) continue;
            Rat f = s[r][col] / s[col][col];
            for (int j = col; j < size; ++j) s[r][j] -= f * s[col][j];
        }
    }
    return det;
}

Rat discriminant(const UPoly& q) {
    int m = q.degree();
    if (m < 1) throw std::domain_error("discriminant needs degree >= 1");
    Rat r = resultant(q, q.derivative()) / q.lc();
    return (m * (m - 1) / 2) % 2 == 0 ? r : -r;
}

Rat cauchy_root_bound(const UPoly& q) {
    if (q.is_zero()) throw std::domain_error("zero polynomial");
    Rat mx = 0;
    for (int i = 0; i < q.degree(); ++i) {
        Rat m = abs(q.coeff(i));
        if (m > mx) mx = m;
    }
    return 1 + mx / abs(q.lc());
}

}  // namespace polarsamp
