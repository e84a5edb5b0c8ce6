#include "qce/instruction.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qce {

std::string mode_name(Mode m) { return m == Mode::ideal ? "ideal" : "physical"; }

Mode mode_from_name(const std::string& s)
{
    if (s == "ideal")
        return Mode::ideal;
    if (s == "physical")
        return Mode::physical;
    throw std::invalid_argument("unknown mode '" + s + "' (expected ideal or physical)");
}

Gate rot(Axis axis, int j, double angle) { return rot(axis, std::vector<int>{j}, std::vector<int>{1}, angle); }

Gate rot(Axis axis, std::vector<int> qubits, std::vector<int> signs, double angle)
{
    if (qubits.empty() || qubits.size() != signs.size())
        throw std::invalid_argument("rotation needs one sign per qubit");
    Gate g;
    g.kind = GateKind::rotation;
    g.axis = axis;
    g.qubits = std::move(qubits);
    g.signs = std::move(signs);
    g.angle = angle;
    return g;
}

Gate X(int j, bool inverse) { return rot(Axis::x, j, inverse ? -std::numbers::pi / 2 : std::numbers::pi / 2); }
Gate Y(int j, bool inverse) { return rot(Axis::y, j, inverse ? -std::numbers::pi / 2 : std::numbers::pi / 2); }

Gate I_phase(int j, int k, double angle)
{
    Gate g;
    g.kind = GateKind::zz_phase;
    g.axis = Axis::z;
    g.qubits = {j, k};
    g.angle = angle;
    return g;
}

Gate I_xy(int j, int k, double angle)
{
    Gate g = I_phase(j, k, angle);
    g.kind = GateKind::xy_exchange;
    return g;
}

namespace {

void append_num(std::string& s, double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g,", v);
    s += buf;
}

void check_qubits(const Gate& g, int n)
{
    for (int q : g.qubits)
        if (q < 1 || q > n)
            throw std::invalid_argument("gate addresses qubit " + std::to_string(q) + " on a " +
                                        std::to_string(n) + "-qubit register");
    if (g.kind != GateKind::rotation && (g.qubits.size() != 2 || g.qubits[0] == g.qubits[1]))
        throw std::invalid_argument("two-qubit gate needs two distinct qubits");
    if (g.kind == GateKind::rotation) {
        if (g.signs.size() != g.qubits.size())
            throw std::invalid_argument("rotation needs one sign per qubit");
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
            for (std::size_t k = i + 1; k < g.qubits.size(); ++k)
                if (g.qubits[i] == g.qubits[k])
                    throw std::invalid_argument("rotation lists a qubit twice");
    }
}

}  // namespace

std::string Pulse::key() const
{
    std::string s = label + "|";
    append_num(s, duration);
    s += machine_couplings ? "c|" : "n|";
    for (const auto& g : groups)
        s += g + ",";
    s += "|";
    for (const auto& t : drive) {
        s += std::string(term_kind_name(t.kind)) + ":" + std::to_string(t.j) + ":" + std::to_string(t.k) + ":" +
             axis_letter(t.axis) + ":";
        append_num(s, t.strength);
        append_num(s, t.frequency);
        append_num(s, t.phase);
        s += t.group + ";";
    }
    return s;
}

QuantumProgram& QuantumProgram::then(const QuantumProgram& p)
{
    body.insert(body.end(), p.body.begin(), p.body.end());
    return *this;
}

QuantumProgram& QuantumProgram::then(MicroInstruction mi)
{
    body.push_back(std::move(mi));
    return *this;
}

QuantumProgram QuantumProgram::repeated(int times) const
{
    QuantumProgram out;
    out.name = name + "^" + std::to_string(times);
    for (int i = 0; i < times; ++i)
        out.then(*this);
    return out;
}

Operator ideal_gate_matrix(const Gate& g, int n)
{
    check_qubits(g, n);
    const Eigen::Index d = Eigen::Index(1) << n;
    switch (g.kind) {
    case GateKind::rotation: {
        // exp(i a s S^axis) = cos(a/2) + i s sin(a/2) sigma^axis, one factor per qubit
        CMatrix u = CMatrix::Identity(d, d);
        const CMatrix id = CMatrix::Identity(d, d);
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            const double a = g.angle * g.signs[i] / 2;
            u = (std::cos(a) * id + cplx(0.0, 2.0 * std::sin(a)) * spin_matrix(g.qubits[i], g.axis, n)) * u;
        }
        return Operator(std::move(u));
    }
    case GateKind::zz_phase: {
        CMatrix u = CMatrix::Zero(d, d);
        for (Eigen::Index b = 0; b < d; ++b) {
            const double sj = qubit_bit(static_cast<std::size_t>(b), g.qubits[0]) ? -0.5 : 0.5;
            const double sk = qubit_bit(static_cast<std::size_t>(b), g.qubits[1]) ? -0.5 : 0.5;
            u(b, b) = std::polar(1.0, -g.angle * sj * sk);
        }
        return Operator(std::move(u));
    }
    case GateKind::xy_exchange: {
        // exp(i a (S^x S^x + S^y S^y)) swaps |10> and |01> on the pair with cos(a/2), i sin(a/2)
        CMatrix u = CMatrix::Identity(d, d);
        const std::size_t mj = std::size_t(1) << (g.qubits[0] - 1);
        const std::size_t mk = std::size_t(1) << (g.qubits[1] - 1);
        const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
        for (Eigen::Index b = 0; b < d; ++b) {
            const auto ub = static_cast<std::size_t>(b);
            if (((ub & mj) != 0) == ((ub & mk) != 0))
                continue;
            const auto f = static_cast<Eigen::Index>(ub ^ mj ^ mk);
            u(b, b) = c;
            u(f, b) = cplx(0.0, s);
        }
        return Operator(std::move(u));
    }
    }
    throw std::logic_error("unhandled gate kind");
}

bool is_inverse_pair(const Gate& a, const Gate& b)
{
    return a.kind == b.kind && a.axis == b.axis && a.qubits == b.qubits && a.signs == b.signs &&
           a.angle == -b.angle;
}

Gate remap(const Gate& g, const std::map<int, int>& map)
{
    Gate out = g;
    for (int& q : out.qubits) {
        auto it = map.find(q);
        if (it == map.end())
            throw std::invalid_argument("qubit " + std::to_string(q) + " missing from relabelling");
        q = it->second;
    }
    return out;
}

QuantumProgram remap(const QuantumProgram& p, const std::map<int, int>& map, const std::string& name)
{
    QuantumProgram out;
    out.name = name;
    for (const auto& mi : p.body) {
        if (const auto* g = std::get_if<Gate>(&mi))
            out.body.push_back(remap(*g, map));
        else
            throw std::invalid_argument("only gate programs can be relabelled");
    }
    return out;
}

namespace {

void flatten_into(const QuantumProgram& p, const ProgramLibrary& lib, std::vector<std::string>& stack,
                  QuantumProgram& out)
{
    for (const auto& mi : p.body) {
        const auto* c = std::get_if<Call>(&mi);
        if (!c) {
            out.body.push_back(mi);
            continue;
        }
        for (const auto& s : stack)
            if (s == c->name)
                throw std::invalid_argument("recursive program call '" + c->name + "'");
        auto it = lib.find(c->name);
        if (it == lib.end())
            throw std::invalid_argument("unresolved program '" + c->name + "'");
        stack.push_back(c->name);
        flatten_into(it->second, lib, stack, out);
        stack.pop_back();
    }
}

}  // namespace

QuantumProgram flatten(const QuantumProgram& p, const ProgramLibrary& lib)
{
    QuantumProgram out;
    out.name = p.name;
    std::vector<std::string> stack{p.name};
    flatten_into(p, lib, stack, out);
    return out;
}

int max_qubit(const QuantumProgram& p)
{
    int m = 0;
    for (const auto& mi : p.body) {
        if (const auto* g = std::get_if<Gate>(&mi))
            for (int q : g->qubits)
                m = std::max(m, q);
        if (const auto* pl = std::get_if<Pulse>(&mi))
            for (const auto& t : pl->drive)
                m = std::max({m, t.j, t.k});
    }
    return m;
}

}  // namespace qce
