#include "polarsamp/pipeline.hpp"

#include <stdexcept>

namespace polarsamp {

ProblemInstance prepare_instance(const std::string& text, int n, const RunConfig& config) {
    Circuit c = parse_expression(text, n);
    DensePoly dense = expand_to_dense(c, 0, config.degree_cap);
    if (dense.is_constant()) throw std::invalid_argument("input polynomial is constant");
    ProblemInstance inst{std::move(c), n, 0, 0, DensePoly(n), false, text};
    inst.length = inst.circuit.length();
    DensePoly sf = squarefree_part(dense).primitive_part();
    inst.squarefree_reduced = !(sf == dense.primitive_part());
    inst.dense = std::move(sf);
    inst.d = inst.dense.total_degree();
    return inst;
}

std::string to_string(StructureVerdict v) {
    switch (v) {
        case StructureVerdict::CompatibleCompactSmooth: return "CompatibleCompactSmooth";
        case StructureVerdict::NotCompactSmoothOrEmpty: return "NotCompactSmoothOrEmpty";
        case StructureVerdict::GenericityExhausted: return "GenericityExhausted";
    }
    return "?";
}

std::string to_string(DimensionVerdict v) {
    switch (v) {
        case DimensionVerdict::Empty: return "Empty";
        case DimensionVerdict::ZeroDimensional: return "ZeroDimensional";
        case DimensionVerdict::PositiveDimensional: return "PositiveDimensional";
    }
    return "?";
}

StructureVerdict decide_structure(DimensionVerdict dim, size_t real_root_count) {
    if (dim == DimensionVerdict::ZeroDimensional && real_root_count >= 1)
        return StructureVerdict::CompatibleCompactSmooth;
    return StructureVerdict::NotCompactSmoothOrEmpty;
}

namespace {

Rat pow10_inv(unsigned digits) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, digits);
    return Rat(1, d);
}

std::vector<SamplePoint> certified_points(const UnivariateRepresentation& rep, std::vector<RealRoot>& roots,
                                          unsigned precision) {
    int n = static_cast<int>(rep.p.size());
    Rat tol = pow10_inv(precision);
    std::vector<SamplePoint> pts;
    for (auto& root : roots) {
        RatInterval iv = root.interval;
        Rat width = iv.width();
        std::vector<RatInterval> box;
        for (int iter = 0;; ++iter) {
            std::vector<RatInterval> y;
            y.reserve(n);
            for (const UPoly& pk : rep.p) y.push_back(pk.eval_interval(iv));
            box = rep.change.apply_box(y);
            bool tight = true;
            for (const auto& b : box)
                if (b.width() > tol) tight = false;
            if (tight || iter >= 40 || iv.lo == iv.hi) break;
            width /= 1024;
            refine_root(rep.q, iv, width);
        }
        root.interval = iv;
        pts.push_back(SamplePoint{std::move(box)});
    }
    return pts;
}

}  // namespace

SampleReport sample_hypersurface(const ProblemInstance& inst, const RunConfig& config) {
    const DensePoly& f = inst.dense;
    int n = inst.n;
    int i = n - 1;
    SampleReport rep;
    rep.degrees.bezout_bound = bezout_bound(inst.d, n);
    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        rep.attempts_used = attempt + 1;
        CoordinateChange ch;
        if (config.coords == RunConfig::Coords::Identity && attempt == 0)
            ch = identity_change(n, i);
        else
            ch = sample_coordinate_change(n, i, config.seed + attempt, config.entry_bound);
        PolarSystem sys = polar_system(f, i, ch);
        EliminationBasis basis = saturate_by_delta(sys, config.limits);
        rep.dimension = dimension_verdict(basis);
        if (rep.dimension != DimensionVerdict::ZeroDimensional) {
            rep.verdict = decide_structure(rep.dimension, 0);
            return rep;
        }
        UnivariateRepresentation urep;
        try {
            urep = extract_representation(basis, sys, config.limits);
        } catch (const ShapePositionFailure& e) {
            rep.notes.push_back("attempt " + std::to_string(attempt) + ": " + e.what());
            continue;
        }
        rep.verification = verify_representation(urep, sys);
        if (!rep.verification.separable) {
            rep.notes.push_back("attempt " + std::to_string(attempt) + ": q not separable, resampling");
            continue;
        }
        rep.roots = thom_encode_roots(urep.q);
        rep.real_part_cert = real_part(urep.q);
        rep.points = certified_points(urep, rep.roots, config.precision);
        rep.degrees.delta[i] = urep.q.degree();
        rep.representation = std::move(urep);
        rep.verdict = decide_structure(rep.dimension, rep.roots.size());
        return rep;
    }
    rep.verdict = StructureVerdict::GenericityExhausted;
    return rep;
}

DegreeReport degrees(const ProblemInstance& inst, const RunConfig& config, const std::vector<int>& indices) {
    DegreeReport out;
    out.bezout_bound = bezout_bound(inst.d, inst.n);
    for (int i : indices) out.delta[i] = polar_degree(inst.dense, i, config.seed, config.entry_bound, config.limits);
    return out;
}

namespace {

using json = nlohmann::ordered_json;

json upoly_json(const UPoly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(rat_to_string(p.coeff(i)));
    return a;
}

json interval_json(const RatInterval& iv) { return json::array({rat_to_string(iv.lo), rat_to_string(iv.hi)}); }

}  // namespace

json report_json(const ProblemInstance& inst, const RunConfig& config, const SampleReport& report) {
    json j;
    j["instance"] = {{"n", inst.n}, {"d", inst.d}, {"L", inst.length}, {"poly", inst.poly_text}};
    j["config"] = {{"seed", config.seed},
                   {"coords", config.coords == RunConfig::Coords::Identity ? "identity" : "random"},
                   {"entry_bound", config.entry_bound},
                   {"max_retries", config.max_retries},
                   {"precision", config.precision}};
    j["verdict"] = to_string(report.verdict);
    j["dimension"] = to_string(report.dimension);
    if (report.representation) {
        const auto& r = *report.representation;
        json p = json::array();
        for (const auto& pk : r.p) p.push_back(upoly_json(pk));
        json ch;
        ch["n"] = r.change.n;
        ch["i"] = r.change.i;
        ch["seed"] = r.change.seed;
        json mat = json::array();
        for (const auto& row : r.change.matrix()) {
            json jr = json::array();
            for (const auto& e : row) jr.push_back(rat_to_string(e));
            mat.push_back(jr);
        }
        ch["matrix"] = mat;
        j["representation"] = {{"q", upoly_json(r.q)},
                               {"p", p},
                               {"discriminant", rat_to_string(r.discriminant)},
                               {"coordinate_change", ch}};
        j["verification"] = {{"equations_vanish", report.verification.equations_vanish},
                             {"delta_coprime", report.verification.delta_coprime},
                             {"jacobian_unit", report.verification.jacobian_unit},
                             {"separable", report.verification.separable}};
    }
    json roots = json::array();
    for (const auto& r : report.roots) {
        json thom = json::array();
        for (int s : r.thom) thom.push_back(s);
        roots.push_back({{"interval", interval_json(r.interval)},
                         {"thom", thom},
                         {"approx", decimal_string(r.interval.mid(), config.precision)}});
    }
    j["roots"] = roots;
    json points = json::array();
    for (const auto& pt : report.points) {
        json exact = json::array(), approx = json::array();
        for (const auto& c : pt.coords) {
            exact.push_back(interval_json(c));
            approx.push_back(decimal_string(c.mid(), config.precision));
        }
        points.push_back({{"exact_intervals", exact}, {"approx", approx}});
    }
    j["points"] = points;
    json deg;
    json dmap;
    for (const auto& [i, d] : report.degrees.delta) dmap[std::to_string(i)] = d;
    deg["delta"] = dmap;
    deg["bezout_bound"] = report.degrees.bezout_bound.get_str();
    j["degrees"] = deg;
    if (report.real_part_cert) {
        const auto& c = *report.real_part_cert;
        json factors = json::array();
        for (const auto& [f, k] : c.factors) factors.push_back({{"coeffs", upoly_json(f)}, {"real_roots", k}});
        j["real_part"] = {{"factors", factors},
                          {"q_star", upoly_json(c.q_star)},
                          {"delta_star", c.delta_star},
                          {"m", c.m}};
    }
    j["notes"] = report.notes;
    return j;
}

int exit_code_for(const SampleReport& report) {
    switch (report.verdict) {
        case StructureVerdict::CompatibleCompactSmooth: return 0;
        case StructureVerdict::GenericityExhausted: return 4;
        case StructureVerdict::NotCompactSmoothOrEmpty:
            return report.dimension == DimensionVerdict::ZeroDimensional ? 3 : 2;
    }
    return 1;
}

}  // namespace polarsamp
