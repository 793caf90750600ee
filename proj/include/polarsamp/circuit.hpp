#ifndef POLARSAMP_CIRCUIT_HPP
#define POLARSAMP_CIRCUIT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarsamp/densepoly.hpp"
#include "polarsamp/rational.hpp"

namespace polarsamp {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

/// Division-free straight-line program over Q. Gates reference only earlier
/// gates; the length L is the total node count (inputs and constants included).
class Circuit {
public:
    enum class GateKind { Input, Constant, Add, Sub, Mul };

    struct Gate {
        GateKind kind;
        int a = -1, b = -1;  // operands, indices of earlier gates
        int var = -1;        // Input: 0-based variable index
        Rat value;           // Constant
    };

    explicit Circuit(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("need at least one variable");
    }

    int num_vars() const { return num_vars_; }
    int length() const { return static_cast<int>(gates_.size()); }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<int>& outputs() const { return outputs_; }

    // Builders; each returns the node index. Identical nodes are shared.
    int input(int var);
    int constant(const Rat& value);
    int add(int a, int b);
    int sub(int a, int b);
    int mul(int a, int b);
    /// a^e by repeated squaring.
    int power(int a, unsigned e);
    void mark_output(int node) { outputs_.push_back(check(node)); }

    std::vector<Rat> evaluate(const std::vector<Rat>& point) const;
    /// All gates evaluated in F_p; throws if p divides a constant's denominator.
    std::vector<uint64_t> evaluate_mod(const std::vector<Rat>& point, uint64_t p) const;

private:
    int check(int node) const;
    int push(Gate g);
    int num_vars_;
    std::vector<Gate> gates_;
    std::vector<int> outputs_;
};

/// Parse the expression grammar
///   expr := term (("+"|"-") term)* ; term := factor ("*" factor)* ;
///   factor := base ("^" uint)? ; base := rational | var | "(" expr ")" ;
///   var := "x" uint (1-based) ; rational := int ("/" uint)?
/// into a single-output circuit.
Circuit parse_expression(const std::string& text, int num_vars);

/// Reverse-mode derivative circuit: outputs f, df/dx1, ..., df/dxn.
/// Length is at most 5*L + 4*n.
Circuit gradient_circuit(const Circuit& c);

/// Single output computing sum_j (df/dxj)^2.
Circuit delta_circuit(const Circuit& c);

struct ExpansionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expand to a sparse coefficient map. Throws ExpansionError if any gate's
/// total degree exceeds degree_cap or the term count exceeds term_cap.
DensePoly expand_to_dense(const Circuit& c, int output, int degree_cap, size_t term_cap = 2'000'000);

}  // namespace polarsamp

#endif
