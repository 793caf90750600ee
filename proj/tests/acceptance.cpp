// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polarsamp/pipeline.hpp"

using namespace polarsamp;

namespace {

Rat Q(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

struct Checker {
    bool ok = true;
    std::vector<std::string> details;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
};

int failures = 0;

void run_criterion(int k, const std::string& title, double time_limit_s,
                   const std::function<void(Checker&)>& body) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < time_limit_s,
             "runtime " + std::to_string(secs) + "s exceeds " + std::to_string(time_limit_s) + "s");
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << k << ": " << title;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << "  [" << t.str() << "s]\n";
    for (const auto& d : c.details) std::cout << "       " << d << "\n";
    if (!c.ok) ++failures;
}

struct Run {
    ProblemInstance inst;
    SampleReport rep;
};

Run sample_of(const std::string& poly, int n, const RunConfig& cfg) {
    ProblemInstance inst = prepare_instance(poly, n, cfg);
    SampleReport rep = sample_hypersurface(inst, cfg);
    return {std::move(inst), std::move(rep)};
}

// f(A p(X)) mod q, for checking the parametrized points against the input.
UPoly residue_on_curve(const DensePoly& f, const UnivariateRepresentation& rep) {
    std::vector<UPoly> xp = rep.p;
    for (int r = 0; r < rep.change.n - rep.change.i; ++r)
        for (int j = 0; j < rep.change.i; ++j)
            xp[rep.change.i + r] = xp[rep.change.i + r] + rep.p[j] * rep.change.block[r][j];
    return f.eval_upoly_mod(xp, rep.q);
}

void criterion1(Checker& c) {
    RunConfig cfg;
    cfg.seed = 2;
    cfg.entry_bound = 10;
    auto [inst, rep] = sample_of("x1^2+x2^2-1", 2, cfg);
    c.expect(rep.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict not CompatibleCompactSmooth");
    if (!rep.representation) return;
    c.expect(rep.representation->q.degree() == 2, "deg q != 2");
    c.expect(rep.roots.size() == 2, "expected exactly 2 real roots");
    c.expect(residue_on_curve(inst.dense, *rep.representation).is_zero(), "f(p) != 0 mod q");

    RunConfig idc = cfg;
    idc.coords = RunConfig::Coords::Identity;
    SampleReport idr = sample_of("x1^2+x2^2-1", 2, idc).rep;
    c.expect(idr.points.size() == 2, "identity coords: expected 2 points");
    if (idr.points.size() == 2) {
        for (const auto& pt : idr.points) {
            c.expect(pt.coords[0].lo == 0 && pt.coords[0].hi == 0, "identity coords: x1 != 0 exactly");
        }
        c.expect(idr.points[0].coords[1].lo <= Q(-1) && Q(-1) <= idr.points[0].coords[1].hi,
                 "first point is not (0,-1)");
        c.expect(idr.points[1].coords[1].lo <= Q(1) && Q(1) <= idr.points[1].coords[1].hi,
                 "second point is not (0,1)");
    }
}

void criterion2(Checker& c) {
    RunConfig cfg;
    cfg.coords = RunConfig::Coords::Identity;
    SampleReport rep = sample_of("x1^2+2*x2^2+3*x3^2-1", 3, cfg).rep;
    c.expect(rep.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict not CompatibleCompactSmooth");
    if (!rep.representation) return;
    c.expect(rep.representation->q == UPoly{Q(-1, 3), Q(0), Q(1)}, "q != X^2 - 1/3");
    c.expect(rep.verification.ok(), "verification checks failed");
    c.expect(rep.points.size() == 2, "expected 2 points");
    if (rep.points.size() == 2) {
        Rat lo(57735, 100000), hi(57736, 100000);  // 1/sqrt(3) = 0.5773502...
        for (const auto& pt : rep.points)
            for (int j = 0; j < 2; ++j)
                c.expect(pt.coords[j].lo == 0 && pt.coords[j].hi == 0, "x1, x2 should be exactly 0");
        c.expect(rep.points[1].coords[2].lo <= hi && rep.points[1].coords[2].hi >= lo,
                 "interval does not contain 0.57735...");
        c.expect(rep.points[0].coords[2].lo <= -lo && rep.points[0].coords[2].hi >= -hi,
                 "interval does not contain -0.57735...");
    }
}

void criterion3(Checker& c) {
    RunConfig cfg;
    cfg.seed = 3;
    cfg.entry_bound = 5;
    auto [inst, rep] = sample_of("((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)", 2, cfg);
    c.expect(rep.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict not CompatibleCompactSmooth");
    if (!rep.representation) return;
    c.expect(rep.representation->q.degree() == 4, "deg q != 4");
    c.expect(rep.degrees.delta.count(1) && rep.degrees.delta.at(1) == 4, "delta_1 != 4");
    c.expect(rep.degrees.bezout_bound == 12, "d(d-1)^{n-1} != 12");
    c.expect(Int(rep.representation->q.degree()) < rep.degrees.bezout_bound,
             "degree not strictly below the bound");
    c.expect(rep.roots.size() == 4, "expected 4 real roots");

    // membership in a component via the exact sign of each circle factor
    Circuit right = parse_expression("(x1-2)^2+x2^2-1", 2);
    Circuit left = parse_expression("(x1+2)^2+x2^2-1", 2);
    DensePoly rf = expand_to_dense(right, 0, 8), lf = expand_to_dense(left, 0, 8);
    int on_right = 0, on_left = 0;
    for (const auto& pt : rep.points) {
        RatInterval rv = rf.eval_interval(pt.coords);
        RatInterval lv = lf.eval_interval(pt.coords);
        bool r = rv.contains_zero() && lv.sign() != 0;
        bool l = lv.contains_zero() && rv.sign() != 0;
        c.expect(r != l, "point not certified on exactly one circle");
        on_right += r;
        on_left += l;
    }
    c.expect(on_right >= 1, "no point on the right circle");
    c.expect(on_left >= 1, "no point on the left circle");
}

void criterion4(Checker& c) {
    RunConfig cfg;
    cfg.seed = 2;
    cfg.entry_bound = 10;
    SampleReport rep = sample_of("(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", 3, cfg).rep;
    c.expect(rep.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict not CompatibleCompactSmooth");
    c.expect(rep.roots.size() == 4, "expected exactly 4 real roots");
    c.expect(rep.points.size() == 4, "expected 4 points");
    c.expect(rep.verification.equations_vanish, "parametrization check failed");
    c.expect(rep.verification.delta_coprime, "Delta-coprimality check failed");
    c.expect(rep.verification.jacobian_unit, "Jacobian unit-determinant check failed");
    c.expect(rep.verification.separable, "separability check failed");
}

void criterion5(Checker& c) {
    RunConfig cfg;
    SampleReport rep = sample_of("x1^2+x2^2+1", 2, cfg).rep;
    c.expect(rep.verdict == StructureVerdict::NotCompactSmoothOrEmpty, "imaginary circle: wrong verdict");
    c.expect(exit_code_for(rep) == 3, "imaginary circle: exit code != 3");
    c.expect(rep.points.empty(), "imaginary circle: emitted a sample point");

    RunConfig idc;
    idc.coords = RunConfig::Coords::Identity;
    SampleReport hyp = sample_of("x1*x2-1", 2, idc).rep;
    c.expect(hyp.dimension == DimensionVerdict::Empty, "hyperbola: polar variety not empty");
    int code = exit_code_for(hyp);
    c.expect(code == 2 || code == 3, "hyperbola: unexpected exit code");
    c.expect(hyp.points.empty(), "hyperbola: emitted a sample point");
}

void criterion6(Checker& c) {
    std::mt19937_64 rng(0xacce97);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);  // 2..5
        std::ostringstream poly;
        for (int j = 1; j <= n; ++j) poly << (j > 1 ? " + " : "") << 1 + rng() % 9 << "*x" << j << "^2";
        poly << " - 1";
        RunConfig cfg;
        cfg.seed = rng();
        cfg.entry_bound = 10;
        auto [inst, rep] = sample_of(poly.str(), n, cfg);
        std::string label = "instance " + std::to_string(t) + " (" + poly.str() + "): ";
        c.expect(rep.verdict == StructureVerdict::CompatibleCompactSmooth, label + "no sample");
        if (!rep.representation) return;
        const UPoly& q = rep.representation->q;
        c.expect(q.degree() == 2, label + "deg q != 2");
        c.expect(rep.roots.size() == 2, label + "expected 2 real roots");
        c.expect(rep.verification.separable, label + "q not separable");
        for (const auto& pk : rep.representation->p)
            c.expect(pk.degree() < q.degree(), label + "deg p_k >= deg q");
        long delta_star = rep.real_part_cert ? rep.real_part_cert->delta_star : -1;
        long delta_n1 = rep.degrees.delta.at(n - 1);
        c.expect(static_cast<long>(rep.roots.size()) <= delta_star, label + "#roots > delta*");
        c.expect(delta_star <= delta_n1, label + "delta* > delta_{n-1}");
        c.expect(Int(delta_n1) <= rep.degrees.bezout_bound, label + "delta_{n-1} > Bezout bound");

        ProblemInstance inst2 = prepare_instance(poly.str(), n, cfg);
        SampleReport rep2 = sample_hypersurface(inst2, cfg);
        c.expect(report_json(inst, cfg, rep).dump() == report_json(inst2, cfg, rep2).dump(),
                 label + "reports not byte-identical");
    }
}

void criterion7(Checker& c) {
    UPoly X = UPoly::variable();
    UPoly q = (X * X - UPoly::constant(Q(2))) * (X * X + UPoly::constant(Q(1)));
    RealPartCertificate cert = real_part(q);
    c.expect(cert.q_star == X * X - UPoly::constant(Q(2)), "q* != X^2 - 2");
    c.expect(cert.delta_star == 2, "delta* != 2");
    c.expect(cert.m == 1, "m != 1");

    RealPartCertificate none = real_part(X * X + UPoly::constant(Q(1)));
    c.expect(none.delta_star == 0, "X^2+1: delta* != 0");
    c.expect(none.m == 0, "X^2+1: real factor count != 0");
    c.expect(none.q_star == UPoly::constant(Q(1)), "X^2+1: q* != 1");
}

void criterion8(Checker& c) {
    std::mt19937_64 rng(0x5eed8);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (int t = 0; t < 100; ++t) {
        int nvars = 1 + static_cast<int>(rng() % 4);
        Circuit circ(nvars);
        std::vector<int> pool;
        for (int j = 0; j < nvars; ++j) pool.push_back(circ.input(j));
        pool.push_back(circ.constant(Q(3)));
        pool.push_back(circ.constant(Q(-1, 2)));
        for (int k = 0; k < 7; ++k) {
            int a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
            switch (rng() % 3) {
                case 0: pool.push_back(circ.add(a, b)); break;
                case 1: pool.push_back(circ.sub(a, b)); break;
                default: pool.push_back(circ.mul(a, b)); break;
            }
        }
        circ.mark_output(pool.back());
        Circuit grad = gradient_circuit(circ);
        c.expect(grad.length() <= 5 * circ.length() + 4 * nvars, "length bound violated");
        DensePoly dense = expand_to_dense(circ, 0, 256);
        std::vector<Rat> pt;
        for (int j = 0; j < nvars; ++j) pt.push_back(Q(num(rng), den(rng)));
        std::vector<Rat> v = grad.evaluate(pt);
        bool agree = v[0] == dense.eval(pt);
        for (int j = 0; j < nvars; ++j) agree = agree && v[j + 1] == dense.partial_derivative(j).eval(pt);
        c.expect(agree, "gradient disagrees with symbolic partials on pair " + std::to_string(t));
    }
}

}  // namespace

int main() {
    run_criterion(1, "circle sample and exact identity-coordinate points", 1.0, criterion1);
    run_criterion(2, "ellipsoid representation and certified 1/sqrt(3) intervals", 1.0, criterion2);
    run_criterion(3, "two disjoint circles: degree 4 below bound 12, both components hit", 5.0, criterion3);
    run_criterion(4, "torus: 4 certified points, all verification checks", 60.0, criterion4);
    run_criterion(5, "empty and non-compact detection without sample points", 1.0, criterion5);
    run_criterion(6, "50 randomized ellipsoids: degree, root count, chain, determinism", 120.0, criterion6);
    run_criterion(7, "real-degree certificate for (X^2-2)(X^2+1) and X^2+1", 1.0, criterion7);
    run_criterion(8, "gradient circuits match symbolic partials within the length bound", 10.0, criterion8);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
