#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polarsamp/pipeline.hpp"

using namespace polarsamp;
using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string poly;
    std::string infile;
    int nvars = 0;
    uint64_t seed = 0;
    std::string coords = "random";
    long entry_bound = 100;
    int max_retries = 8;
    unsigned precision = 30;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_nvars = true) {
    cmd->add_option("--poly", o.poly, "polynomial expression in x1..xn");
    cmd->add_option("--infile", o.infile, "file containing the polynomial expression");
    if (need_nvars) cmd->add_option("--nvars", o.nvars, "number of variables")->required();
    cmd->add_option("--seed", o.seed, "seed for coordinate changes and sections");
    cmd->add_option("--coords", o.coords, "identity|random (default random)")
        ->check(CLI::IsMember({"identity", "random"}));
    cmd->add_option("--entry-bound", o.entry_bound, "magnitude bound for coordinate-change entries");
    cmd->add_option("--max-retries", o.max_retries, "genericity retry budget");
    cmd->add_option("--precision", o.precision, "decimal digits for approximations");
    cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
}

std::string read_poly(const CommonOpts& o) {
    if (!o.poly.empty()) return o.poly;
    if (o.infile.empty()) throw CLI::ValidationError("--poly or --infile is required");
    std::ifstream in(o.infile);
    if (!in) throw CLI::ValidationError("cannot open " + o.infile);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig config_of(const CommonOpts& o) {
    RunConfig c;
    c.seed = o.seed;
    c.coords = o.coords == "identity" ? RunConfig::Coords::Identity : RunConfig::Coords::Random;
    c.entry_bound = o.entry_bound;
    c.max_retries = o.max_retries;
    c.precision = o.precision;
    return c;
}

void print_text_report(const ProblemInstance& inst, const SampleReport& rep, unsigned precision) {
    std::cout << "verdict: " << to_string(rep.verdict) << " (W_{n-1} " << to_string(rep.dimension) << ")\n";
    std::cout << "n=" << inst.n << " d=" << inst.d << " L=" << inst.length << "\n";
    if (rep.representation) {
        std::cout << "q = " << rep.representation->q.to_string() << "  (degree "
                  << rep.representation->q.degree() << ")\n";
        for (size_t k = 0; k < rep.representation->p.size(); ++k)
            std::cout << "p" << (k + 1) << " = " << rep.representation->p[k].to_string() << "\n";
    }
    std::cout << rep.roots.size() << " real root(s)\n";
    for (size_t k = 0; k < rep.points.size(); ++k) {
        std::cout << "point " << k << ": (";
        for (size_t c = 0; c < rep.points[k].coords.size(); ++c) {
            if (c) std::cout << ", ";
            std::cout << decimal_string(rep.points[k].coords[c].mid(), std::min(precision, 12u));
        }
        std::cout << ")\n";
    }
    if (rep.real_part_cert)
        std::cout << "real degree delta* = " << rep.real_part_cert->delta_star << " ("
                  << rep.real_part_cert->m << " real factor(s))\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
}

int run_sample(const CommonOpts& o, bool verify_only) {
    auto t0 = std::chrono::steady_clock::now();
    RunConfig config = config_of(o);
    ProblemInstance inst = prepare_instance(read_poly(o), o.nvars, config);
    SampleReport rep = sample_hypersurface(inst, config);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (o.format == "json") {
        json j = report_json(inst, config, rep);
        j["timings_ms"] = {{"total", ms.count()}};
        std::cout << j.dump(2) << "\n";
    } else if (verify_only) {
        std::cout << "equations_vanish: " << rep.verification.equations_vanish << "\n"
                  << "delta_coprime:    " << rep.verification.delta_coprime << "\n"
                  << "jacobian_unit:    " << rep.verification.jacobian_unit << "\n"
                  << "separable:        " << rep.verification.separable << "\n";
        for (const auto& f : rep.verification.failures) std::cout << "failure: " << f << "\n";
    } else {
        print_text_report(inst, rep, o.precision);
    }
    if (verify_only && rep.representation && !rep.verification.ok()) return 1;
    return exit_code_for(rep);
}

int run_degrees(const CommonOpts& o, const std::string& indices_csv) {
    auto t0 = std::chrono::steady_clock::now();
    RunConfig config = config_of(o);
    ProblemInstance inst = prepare_instance(read_poly(o), o.nvars, config);
    std::vector<int> indices;
    if (indices_csv.empty()) {
        for (int i = 0; i < inst.n; ++i) indices.push_back(i);
    } else {
        std::stringstream ss(indices_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) indices.push_back(std::stoi(tok));
    }
    DegreeReport rep = degrees(inst, config, indices);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (o.format == "json") {
        json j;
        j["instance"] = {{"n", inst.n}, {"d", inst.d}, {"L", inst.length}, {"poly", inst.poly_text}};
        json dmap;
        for (const auto& [i, d] : rep.delta) dmap[std::to_string(i)] = d;
        j["degrees"] = {{"delta", dmap}, {"bezout_bound", rep.bezout_bound.get_str()}};
        j["timings_ms"] = {{"total", ms.count()}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [i, d] : rep.delta) std::cout << "delta_" << i << " = " << d << "\n";
        std::cout << "bezout bound = " << rep.bezout_bound.get_str() << "\n";
    }
    return 0;
}

int run_realdegree(const CommonOpts& o) {
    RunConfig config;
    config.precision = o.precision;
    int n = o.nvars > 0 ? o.nvars : 1;
    ProblemInstance inst = prepare_instance(read_poly(o), n, config);
    if (!inst.dense.is_univariate_in(n - 1))
        throw CLI::ValidationError("realdegree expects a univariate polynomial");
    UPoly q = inst.dense.to_upoly(n - 1).monic();
    RealPartCertificate cert = real_part(q);
    if (o.format == "json") {
        json factors = json::array();
        for (const auto& [f, k] : cert.factors) {
            json coeffs = json::array();
            for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(rat_to_string(f.coeff(i)));
            factors.push_back({{"coeffs", coeffs}, {"real_roots", k}});
        }
        json qs = json::array();
        for (int i = 0; i <= cert.q_star.degree(); ++i) qs.push_back(rat_to_string(cert.q_star.coeff(i)));
        json j = {{"factors", factors}, {"q_star", qs}, {"delta_star", cert.delta_star}, {"m", cert.m}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [f, k] : cert.factors)
            std::cout << f.to_string() << "  (" << k << " real root(s))\n";
        std::cout << "q* = " << cert.q_star.to_string() << "\ndelta* = " << cert.delta_star
                  << "\nm = " << cert.m << "\n";
    }
    return cert.delta_star > 0 ? 0 : 3;
}

int run_expand(const CommonOpts& o) {
    RunConfig config;
    ProblemInstance inst = prepare_instance(read_poly(o), o.nvars, config);
    if (o.format == "json") {
        json j = {{"n", inst.n},
                  {"d", inst.d},
                  {"L", inst.length},
                  {"squarefree_reduced", inst.squarefree_reduced},
                  {"dense", inst.dense.to_string()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << inst.dense.to_string() << "\n"
                  << "n=" << inst.n << " d=" << inst.d << " L=" << inst.length << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified sample points on compact smooth real hypersurfaces"};
    app.require_subcommand(1);

    CommonOpts sample_o, degrees_o, real_o, verify_o, expand_o;
    std::string indices_csv;

    auto* sample = app.add_subcommand("sample", "compute certified sample points");
    add_common(sample, sample_o);
    auto* deg = app.add_subcommand("degrees", "geometric degrees of the polar varieties");
    add_common(deg, degrees_o);
    deg->add_option("--indices", indices_csv, "comma-separated polar indices");
    auto* real = app.add_subcommand("realdegree", "factor a univariate q and report its real part");
    add_common(real, real_o, false);
    real->add_option("--nvars", real_o.nvars, "number of variables (default 1)");
    auto* verify = app.add_subcommand("verify", "run the pipeline and report verification checks");
    add_common(verify, verify_o);
    auto* expand = app.add_subcommand("expand", "expand the input circuit to dense form");
    add_common(expand, expand_o);

    CLI11_PARSE(app, argc, argv);
    try {
        if (sample->parsed()) return run_sample(sample_o, false);
        if (deg->parsed()) return run_degrees(degrees_o, indices_csv);
        if (real->parsed()) return run_realdegree(real_o);
        if (verify->parsed()) return run_sample(verify_o, true);
        if (expand->parsed()) return run_expand(expand_o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
