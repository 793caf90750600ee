#include "polarsamp/circuit.hpp"

#include <cctype>

namespace polarsamp {

int Circuit::check(int node) const {
    if (node < 0 || node >= length()) throw std::out_of_range("gate index out of range");
    return node;
}

int Circuit::push(Gate g) {
    // Construction-time sharing: reuse an identical existing node.
    for (int i = 0; i < length(); ++i) {
        const Gate& h = gates_[i];
        if (h.kind != g.kind) continue;
        switch (g.kind) {
            case GateKind::Input:
                if (h.var == g.var) return i;
                break;
            case GateKind::Constant:
                if (h.value == g.value) return i;
                break;
            default:
                if (h.a == g.a && h.b == g.b) return i;
        }
    }
    gates_.push_back(std::move(g));
    return length() - 1;
}

int Circuit::input(int var) {
    if (var < 0 || var >= num_vars_) throw std::out_of_range("variable index out of range");
    Gate g;
    g.kind = GateKind::Input;
    g.var = var;
    return push(g);
}

int Circuit::constant(const Rat& value) {
    Gate g;
    g.kind = GateKind::Constant;
    g.value = value;
    return push(g);
}

int Circuit::add(int a, int b) {
    Gate g;
    g.kind = GateKind::Add;
    g.a = check(std::min(a, b));
    g.b = check(std::max(a, b));
    return push(g);
}

int Circuit::sub(int a, int b) {
    Gate g;
    g.kind = GateKind::Sub;
    g.a = check(a);
    g.b = check(b);
    return push(g);
}

int Circuit::mul(int a, int b) {
    Gate g;
    g.kind = GateKind::Mul;
    g.a = check(std::min(a, b));
    g.b = check(std::max(a, b));
    return push(g);
}

int Circuit::power(int a, unsigned e) {
    check(a);
    if (e == 0) return constant(1);
    // Repeated squaring.
    int result = -1;
    int base = a;
    while (e > 0) {
        if (e & 1u) result = (result < 0) ? base : mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

std::vector<Rat> Circuit::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != num_vars_) throw std::invalid_argument("point dimension mismatch");
    std::vector<Rat> v(length());
    for (int i = 0; i < length(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
            case GateKind::Input: v[i] = point[g.var]; break;
            case GateKind::Constant: v[i] = g.value; break;
            case GateKind::Add: v[i] = v[g.a] + v[g.b]; break;
            case GateKind::Sub: v[i] = v[g.a] - v[g.b]; break;
            case GateKind::Mul: v[i] = v[g.a] * v[g.b]; break;
        }
    }
    std::vector<Rat> out;
    out.reserve(outputs_.size());
    for (int o : outputs_) out.push_back(v[o]);
    return out;
}

namespace {

uint64_t mod_of(const Rat& r, uint64_t p) {
    Int num = r.get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    Int den = r.get_den() % static_cast<unsigned long>(p);
    if (den == 0) throw std::domain_error("prime divides a denominator");
    uint64_t n = num.get_ui(), d = den.get_ui();
    // d^(p-2) mod p
    uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1u) inv = inv * base % p;
        base = base * base % p;
        e >>= 1u;
    }
    return n * inv % p;
}

}  // namespace

std::vector<uint64_t> Circuit::evaluate_mod(const std::vector<Rat>& point, uint64_t p) const {
    if (static_cast<int>(point.size()) != num_vars_) throw std::invalid_argument("point dimension mismatch");
    if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("prime out of supported range");
    std::vector<uint64_t> v(length());
    for (int i = 0; i < length(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
            case GateKind::Input: v[i] = mod_of(point[g.var], p); break;
            case GateKind::Constant: v[i] = mod_of(g.value, p); break;
            case GateKind::Add: v[i] = (v[g.a] + v[g.b]) % p; break;
            case GateKind::Sub: v[i] = (v[g.a] + p - v[g.b]) % p; break;
            case GateKind::Mul: v[i] = v[g.a] * v[g.b] % p; break;
        }
    }
    std::vector<uint64_t> out;
    out.reserve(outputs_.size());
    for (int o : outputs_) out.push_back(v[o]);
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int num_vars) : s_(text), c_(num_vars) {}

    Circuit run() {
        int node = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        c_.mark_output(node);
        return std::move(c_);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    int expr() {
        bool neg = false;
        skip_ws();
        if (eat('+')) {
        } else if (peek() == '-' && !leads_number(pos_)) {
            ++pos_;
            neg = true;
        }
        int node = term();
        if (neg) node = c_.sub(c_.constant(0), node);
        while (true) {
            if (eat('+')) {
                node = c_.add(node, term());
            } else if (peek() == '-') {
                ++pos_;
                node = c_.sub(node, term());
            } else {
                break;
            }
        }
        return node;
    }

    // A '-' starting a rational literal only counts at base positions; at
    // expr level it is always the binary operator, so this is never called
    // there.
    bool leads_number(size_t) const { return false; }

    int term() {
        int node = factor();
        while (eat('*')) node = c_.mul(node, factor());
        return node;
    }

    int factor() {
        int node = base();
        if (eat('^')) {
            unsigned e = parse_uint();
            node = c_.power(node, e);
        }
        return node;
    }

    int base() {
        char ch = peek();
        if (ch == '(') {
            ++pos_;
            int node = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return node;
        }
        if (ch == 'x') {
            ++pos_;
            size_t at = pos_;
            unsigned idx = parse_uint();
            if (idx < 1) throw ParseError("unknown variable x0: indices are 1-based", at);
            if (static_cast<int>(idx) > c_.num_vars())
                throw ParseError("variable index out of range: x" + std::to_string(idx), at);
            return c_.input(static_cast<int>(idx) - 1);
        }
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) return rational();
        throw ParseError("expected rational, variable or '('", pos_);
    }

    int rational() {
        bool neg = eat('-');
        Int num = parse_int();
        Int den = 1;
        if (eat('/')) den = parse_int();
        if (den == 0) throw ParseError("zero denominator", pos_);
        Rat v(num, den);
        v.canonicalize();
        if (neg) v = -v;
        return c_.constant(v);
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return Int(s_.substr(start, pos_ - start));
    }

    unsigned parse_uint() {
        Int v = parse_int();
        if (v < 0 || v > 1'000'000) throw ParseError("exponent or index out of range", pos_);
        return static_cast<unsigned>(v.get_ui());
    }

    const std::string& s_;
    size_t pos_ = 0;
    Circuit c_;
};

}  // namespace

Circuit parse_expression(const std::string& text, int num_vars) { return Parser(text, num_vars).run(); }

Circuit gradient_circuit(const Circuit& c) {
    if (c.outputs().size() != 1) throw std::invalid_argument("gradient needs a single-output circuit");
    Circuit g(c.num_vars());
    // Replay the forward gates, tracking old -> new indices.
    std::vector<int> map(c.length());
    for (int i = 0; i < c.length(); ++i) {
        const Circuit::Gate& gate = c.gates()[i];
        switch (gate.kind) {
            case Circuit::GateKind::Input: map[i] = g.input(gate.var); break;
            case Circuit::GateKind::Constant: map[i] = g.constant(gate.value); break;
            case Circuit::GateKind::Add: map[i] = g.add(map[gate.a], map[gate.b]); break;
            case Circuit::GateKind::Sub: map[i] = g.sub(map[gate.a], map[gate.b]); break;
            case Circuit::GateKind::Mul: map[i] = g.mul(map[gate.a], map[gate.b]); break;
        }
    }
    // Reverse sweep: adj[i] is the node computing d(output)/d(gate i), or -1 for zero.
    std::vector<int> adj(c.length(), -1);
    adj[c.outputs()[0]] = g.constant(1);
    auto accum = [&](int node, int contrib) {
        adj[node] = (adj[node] < 0) ? contrib : g.add(adj[node], contrib);
    };
    auto accum_neg = [&](int node, int contrib) {
        int neg = g.sub(g.constant(0), contrib);
        accum(node, neg);
    };
    for (int i = c.length() - 1; i >= 0; --i) {
        if (adj[i] < 0) continue;
        const Circuit::Gate& gate = c.gates()[i];
        switch (gate.kind) {
            case Circuit::GateKind::Add:
                accum(gate.a, adj[i]);
                accum(gate.b, adj[i]);
                break;
            case Circuit::GateKind::Sub:
                accum(gate.a, adj[i]);
                accum_neg(gate.b, adj[i]);
                break;
            case Circuit::GateKind::Mul:
                accum(gate.a, g.mul(adj[i], map[gate.b]));
                accum(gate.b, g.mul(adj[i], map[gate.a]));
                break;
            default: break;
        }
    }
    g.mark_output(map[c.outputs()[0]]);
    for (int v = 0; v < c.num_vars(); ++v) {
        int node = -1;
        for (int i = 0; i < c.length(); ++i)
            if (c.gates()[i].kind == Circuit::GateKind::Input && c.gates()[i].var == v && adj[i] >= 0) node = adj[i];
        g.mark_output(node >= 0 ? node : g.constant(0));
    }
    return g;
}

Circuit delta_circuit(const Circuit& c) {
    Circuit g = gradient_circuit(c);
    std::vector<int> outs = g.outputs();
    Circuit d(c.num_vars());
    // Rebuild with the gradient's gates, then sum the squared partials.
    std::vector<int> map(g.length());
    for (int i = 0; i < g.length(); ++i) {
        const Circuit::Gate& gate = g.gates()[i];
        switch (gate.kind) {
            case Circuit::GateKind::Input: map[i] = d.input(gate.var); break;
            case Circuit::GateKind::Constant: map[i] = d.constant(gate.value); break;
            case Circuit::GateKind::Add: map[i] = d.add(map[gate.a], map[gate.b]); break;
            case Circuit::GateKind::Sub: map[i] = d.sub(map[gate.a], map[gate.b]); break;
            case Circuit::GateKind::Mul: map[i] = d.mul(map[gate.a], map[gate.b]); break;
        }
    }
    int acc = -1;
    for (size_t j = 1; j < outs.size(); ++j) {
        int sq = d.mul(map[outs[j]], map[outs[j]]);
        acc = (acc < 0) ? sq : d.add(acc, sq);
    }
    d.mark_output(acc);
    return d;
}

DensePoly expand_to_dense(const Circuit& c, int output, int degree_cap, size_t term_cap) {
    if (output < 0 || output >= static_cast<int>(c.outputs().size()))
        throw std::out_of_range("output index out of range");
    int n = c.num_vars();
    std::vector<DensePoly> v(c.length(), DensePoly(n));
    for (int i = 0; i < c.length(); ++i) {
        const Circuit::Gate& g = c.gates()[i];
        switch (g.kind) {
            case Circuit::GateKind::Input: v[i] = DensePoly::variable(n, g.var); break;
            case Circuit::GateKind::Constant: v[i] = DensePoly::constant(n, g.value); break;
            case Circuit::GateKind::Add: v[i] = v[g.a] + v[g.b]; break;
            case Circuit::GateKind::Sub: v[i] = v[g.a] - v[g.b]; break;
            case Circuit::GateKind::Mul: v[i] = v[g.a] * v[g.b]; break;
        }
        if (v[i].total_degree() > degree_cap)
            throw ExpansionError("degree cap " + std::to_string(degree_cap) + " exceeded at gate " +
                                 std::to_string(i));
        if (v[i].terms().size() > term_cap) throw ExpansionError("term cap exceeded during expansion");
    }
    return v[c.outputs()[output]];
}

}  // namespace polarsamp
