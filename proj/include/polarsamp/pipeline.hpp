#ifndef POLARSAMP_PIPELINE_HPP
#define POLARSAMP_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polarsamp/circuit.hpp"
#include "polarsamp/eliminate.hpp"
#include "polarsamp/realdegree.hpp"
#include "polarsamp/realroots.hpp"

namespace polarsamp {

struct RunConfig {
    enum class Coords { Identity, Random };
    uint64_t seed = 0;
    Coords coords = Coords::Random;
    long entry_bound = 100;
    int max_retries = 8;
    unsigned precision = 30;
    int degree_cap = 64;
    EliminationLimits limits;
};

struct ProblemInstance {
    Circuit circuit;
    int n = 0;
    int d = 0;
    int length = 0;      // L of the input circuit
    DensePoly dense;     // squarefree part of the expanded input
    bool squarefree_reduced = false;
    std::string poly_text;
};

ProblemInstance prepare_instance(const std::string& text, int n, const RunConfig& config);

enum class StructureVerdict { CompatibleCompactSmooth, NotCompactSmoothOrEmpty, GenericityExhausted };

std::string to_string(StructureVerdict v);
std::string to_string(DimensionVerdict v);

StructureVerdict decide_structure(DimensionVerdict dim, size_t real_root_count);

struct SamplePoint {
    std::vector<RatInterval> coords;  // certified enclosures in the original coordinates
};

struct SampleReport {
    StructureVerdict verdict = StructureVerdict::GenericityExhausted;
    DimensionVerdict dimension = DimensionVerdict::PositiveDimensional;
    std::optional<UnivariateRepresentation> representation;
    VerificationReport verification;
    std::vector<RealRoot> roots;
    std::vector<SamplePoint> points;
    DegreeReport degrees;
    std::optional<RealPartCertificate> real_part_cert;
    int attempts_used = 0;
    std::vector<std::string> notes;
};

SampleReport sample_hypersurface(const ProblemInstance& inst, const RunConfig& config);

DegreeReport degrees(const ProblemInstance& inst, const RunConfig& config, const std::vector<int>& indices);

/// Deterministic JSON body (no timings; the CLI attaches those).
nlohmann::ordered_json report_json(const ProblemInstance& inst, const RunConfig& config,
                                   const SampleReport& report);

/// 0 real points found; 2 not zero-dimensional / empty; 3 no real points;
/// 4 genericity retries exhausted.
int exit_code_for(const SampleReport& report);

}  // namespace polarsamp

#endif
