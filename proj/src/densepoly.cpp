#include "polarsamp/densepoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polarsamp {

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

DensePoly DensePoly::constant(int nvars, const Rat& a) {
    DensePoly p(nvars);
    if (a != 0) p.terms_[Monomial(nvars, 0)] = a;
    return p;
}

DensePoly DensePoly::variable(int nvars, int j) {
    Monomial m(nvars, 0);
    m.at(j) = 1;
    return term(nvars, m, 1);
}

DensePoly DensePoly::term(int nvars, Monomial m, const Rat& a) {
    DensePoly p(nvars);
    if (a != 0) p.terms_[std::move(m)] = a;
    return p;
}

DensePoly DensePoly::from_upoly(int nvars, int j, const UPoly& p) {
    DensePoly r(nvars);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        Monomial m(nvars, 0);
        m.at(j) = i;
        r.terms_[m] = p.coeff(i);
    }
    return r;
}

bool DensePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && polarsamp::total_degree(terms_.begin()->first) == 0);
}

int DensePoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(polarsamp::total_degree(m)));
    return d;
}

int DensePoly::degree_in(int j) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[j]));
    return d;
}

const Monomial& DensePoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

const Rat& DensePoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

Rat DensePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void DensePoly::set_coeff(const Monomial& m, const Rat& a) {
    if (a == 0)
        terms_.erase(m);
    else
        terms_[m] = a;
}

DensePoly DensePoly::operator-() const {
    DensePoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    DensePoly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

DensePoly DensePoly::operator-(const DensePoly& o) const { return *this + (-o); }

DensePoly DensePoly::operator*(const DensePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    DensePoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rat p = ca * cb;
                if (p != 0) r.terms_.emplace(std::move(m), std::move(p));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

DensePoly DensePoly::operator*(const Rat& a) const {
    if (a == 0) return DensePoly(nvars_);
    DensePoly r(*this);
    for (auto& [m, c] : r.terms_) c *= a;
    return r;
}

DensePoly DensePoly::partial_derivative(int j) const {
    if (j < 0 || j >= nvars_) throw std::out_of_range("variable index out of range");
    DensePoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[j] == 0) continue;
        Monomial d = m;
        d[j] -= 1;
        r.terms_[d] = c * m[j];
    }
    return r;
}

Rat DensePoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    Rat v = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        v += t;
    }
    return v;
}

DensePoly DensePoly::eval_poly(const std::vector<DensePoly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    int out_vars = subs.empty() ? nvars_ : subs[0].nvars();
    // Cache powers of each substituted variable.
    std::vector<std::vector<DensePoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(DensePoly::constant(out_vars, 1));
    auto power = [&](int i, unsigned e) -> const DensePoly& {
        while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * subs[i]);
        return pows[i][e];
    };
    DensePoly r(out_vars);
    for (const auto& [m, c] : terms_) {
        DensePoly t = DensePoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        r = r + t;
    }
    return r;
}

UPoly DensePoly::eval_upoly_mod(const std::vector<UPoly>& subs, const UPoly& q) const {
    if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    std::vector<std::vector<UPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(UPoly::constant(1));
    auto power = [&](int i, unsigned e) -> const UPoly& {
        while (pows[i].size() <= e) pows[i].push_back(mulmod(pows[i].back(), subs[i], q));
        return pows[i][e];
    };
    UPoly r;
    for (const auto& [m, c] : terms_) {
        UPoly t = UPoly::constant(c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t = mulmod(t, power(i, m[i]), q);
        r = r + t;
    }
    return rem(r, q);
}

RatInterval DensePoly::eval_interval(const std::vector<RatInterval>& box) const {
    if (static_cast<int>(box.size()) != nvars_) throw std::invalid_argument("box dimension mismatch");
    RatInterval v = RatInterval::point(Rat(0));
    for (const auto& [m, c] : terms_) {
        RatInterval t = RatInterval::point(c);
        for (int i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * box[i];
        v += t;
    }
    return v;
}

Rat DensePoly::content() const {
    if (terms_.empty()) return 0;
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        g = ::gcd(g, c.get_num());
        l = ::lcm(l, c.get_den());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (leading_coeff() < 0) cont = -cont;
    return cont;
}

DensePoly DensePoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / content());
}

bool DensePoly::is_univariate_in(int j) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (i != j && m[i] > 0) return false;
    return true;
}

UPoly DensePoly::to_upoly(int j) const {
    if (!is_univariate_in(j)) throw std::domain_error("polynomial is not univariate in the requested variable");
    std::vector<Rat> c(degree_in(j) + 1, Rat(0));
    for (const auto& [m, a] : terms_) c[m[j]] = a;
    return UPoly(std::move(c));
}

DensePoly DensePoly::drop_variable(int j) const {
    if (degree_in(j) != 0) throw std::domain_error("variable occurs, cannot drop");
    DensePoly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial d;
        d.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != j) d.push_back(m[i]);
        r.terms_[std::move(d)] = c;
    }
    return r;
}

DensePoly DensePoly::insert_variable(int j) const {
    DensePoly r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d.insert(d.begin() + j, 0u);
        r.terms_[std::move(d)] = c;
    }
    return r;
}

std::string DensePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        unsigned da = polarsamp::total_degree(a->first), db = polarsamp::total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;  // lex descending within a degree
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const Rat& c = t->second;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_vars = polarsamp::total_degree(t->first) > 0;
        if (mag != 1 || !has_vars) {
            os << mag.get_num().get_str();
            if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (int i = 0; i < nvars_; ++i) {
            unsigned e = t->first[i];
            if (e == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

DensePoly exact_div(const DensePoly& f, const DensePoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    DensePoly r = f, q(f.nvars());
    const Monomial& lg = g.leading_monomial();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!monomial_divides(lg, lr)) throw std::domain_error("inexact multivariate division");
        Monomial t(lr.size());
        for (size_t i = 0; i < lr.size(); ++i) t[i] = lr[i] - lg[i];
        Rat c = r.leading_coeff() / g.leading_coeff();
        DensePoly mono = DensePoly::term(f.nvars(), t, c);
        q = q + mono;
        r = r - g * mono;
    }
    return q;
}

namespace {

int top_var(const DensePoly& p) {
    for (int j = p.nvars() - 1; j >= 0; --j)
        if (p.degree_in(j) > 0) return j;
    return -1;
}

std::vector<DensePoly> coeffs_in(const DensePoly& p, int v) {
    std::vector<DensePoly> cs(p.degree_in(v) + 1, DensePoly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial d = m;
        unsigned e = d[v];
        d[v] = 0;
        cs[e].set_coeff(d, c);
    }
    return cs;
}

DensePoly lead_coeff_in(const DensePoly& p, int v) { return coeffs_in(p, v).back(); }

DensePoly content_in(const DensePoly& p, int v) {
    DensePoly c(p.nvars());
    for (const auto& ci : coeffs_in(p, v))
        if (!ci.is_zero()) c = gcd(c, ci);
    return c;
}

/// Pseudo-remainder in variable v, up to a nonzero multiplier.
DensePoly prem_in(DensePoly a, const DensePoly& b, int v) {
    int db = b.degree_in(v);
    DensePoly lb = lead_coeff_in(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        DensePoly la = lead_coeff_in(a, v);
        Monomial shift(a.nvars(), 0);
        shift[v] = da - db;
        a = a * lb - b * (la * DensePoly::term(a.nvars(), shift, 1));
        if (!a.is_zero() && a.degree_in(v) == da) throw std::logic_error("pseudo-division failed to reduce degree");
    }
    return a;
}

}  // namespace

DensePoly gcd(const DensePoly& f, const DensePoly& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    if (f.is_constant() || g.is_constant()) return DensePoly::constant(f.nvars(), 1);
    int v = std::max(top_var(f), top_var(g));
    if (f.degree_in(v) == 0) return gcd(f, content_in(g, v));
    if (g.degree_in(v) == 0) return gcd(content_in(f, v), g);
    DensePoly cf = content_in(f, v), cg = content_in(g, v);
    DensePoly c = gcd(cf, cg);
    DensePoly a = exact_div(f, cf), b = exact_div(g, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        DensePoly r = prem_in(a, b, v);
        if (r.is_zero()) return (c * b).primitive_part();
        if (r.degree_in(v) == 0) return c.primitive_part();
        a = b;
        b = exact_div(r, content_in(r, v));
    }
}

DensePoly squarefree_part(const DensePoly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    DensePoly g = f;
    for (int j = 0; j < f.nvars(); ++j) {
        DensePoly pj = f.partial_derivative(j);
        if (!pj.is_zero()) g = gcd(g, pj);
    }
    return exact_div(f, g);
}

}  // namespace polarsamp
