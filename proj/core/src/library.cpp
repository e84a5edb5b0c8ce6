#include "qce/library.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "qce/program_text.hpp"

namespace qce {

QuantumProgram from_product(std::string_view notation, const std::string& name)
{
    QuantumProgram p;
    p.name = name;
    std::istringstream in{std::string(notation)};
    std::string tok;
    while (in >> tok) {
        QuantumProgram one = parse_program(tok);
        if (one.body.size() != 1)
            throw std::invalid_argument("bad factor '" + tok + "' in product notation");
        p.body.push_back(one.body.front());
    }
    std::reverse(p.body.begin(), p.body.end());
    return p;
}

namespace {

void check_needle(int n)
{
    if (n < 0 || n > 3)
        throw std::invalid_argument("needle position must be 0..3");
}

std::array<std::string, 2> x_signs(int n)
{
    check_needle(n);
    return {(n & 2) ? "-X1" : "X1", (n & 1) ? "-X2" : "X2"};
}

std::string pair(int s, int t) { return fmt::format("[{},{}]", s, t); }

const std::vector<std::string>& hard_gates()
{
    static const std::vector<std::string> g{"X1", "-X1", "X2", "-X2", "Y1", "-Y1", "Y2", "-Y2"};
    return g;
}

}  // namespace

QuantumProgram prepare_u() { return from_product("-X2 -X2 -Y2 -X1 -X1 -Y1", "prepare-u"); }

QuantumProgram prepare_u_alt() { return from_product("-X1 -X1 -Y1 -X2 -X2 -Y2", "prepare-u'"); }

QuantumProgram oracle(int n)
{
    const auto s = x_signs(n);
    return from_product(fmt::format("-Y1 {} -Y1 Y2 {} -Y2 I(pi)", s[0], s[1]), fmt::format("F{}", n));
}

QuantumProgram grover_query()
{
    return from_product("X1 X1 -Y1 X2 X2 -Y2 Y1 -X1 -Y1 Y2 -X2 -Y2 I(pi) X1 X1 -Y1 X2 X2 -Y2", "G");
}

QuantumProgram grover_query_hat()
{
    return from_product("X1 X1 -Y1 X2 X2 -Y2 Y1 -X1 Y2 -X2 -Y1 -Y2 I(pi) X1 X1 -Y1 X2 X2 -Y2", "G-hat");
}

QuantumProgram grover_query_tilde()
{
    return from_product("X1 X1 -Y1 X2 X2 -Y2 Y2 -X2 -Y2 Y1 -X1 -Y1 I(pi) X2 X2 -Y2 X1 X1 -Y1", "G-tilde");
}

QuantumProgram grover_optimized(int n)
{
    const auto s = x_signs(n);
    return from_product(fmt::format("X1 -Y1 X2 -Y2 I(pi) {} -Y1 {} -Y2 I(pi)", s[0], s[1]), fmt::format("U{}", n));
}

QuantumProgram cnot(int s, int t)
{
    return from_product(fmt::format("Y{0} X{0} X{0} -Y{0} X{1} -Y{1} I{2}(pi) Y{1}", s, t, pair(s, t)),
                        fmt::format("cnot-{}-{}", s, t));
}

QuantumProgram copy_cnot(int s, int t)
{
    QuantumProgram p = cnot(s, t);
    p.name = fmt::format("copy-cnot-{}-{}", s, t);
    p.then(from_product(fmt::format("Y{1} -X{1} X{1} -Y{1} X{0} -Y{0} I{2}(pi) Y{0}", s, t, pair(s, t)), ""));
    return p;
}

QuantumProgram copy_xy(int s, int t)
{
    return from_product(fmt::format("Y{0} X{0} -Y{0} Ixy{1}(pi)", t, pair(s, t)), fmt::format("copy-xy-{}-{}", s, t));
}

QuantumProgram hard_composite(const std::string& gate)
{
    // X' and Y' are 45 degree rotations of both spins, Z' is free evolution
    // rotating spin 1 by +45 and spin 2 by -45 degrees about z.
    static const std::map<std::string, std::string> table{
        {"X1", "X[1,2](pi/4) Y[1,2](-pi/2) Z[1,-2](pi/4) Y[1,2](pi/2)"},
        {"-X1", "X[1,2](-pi/4) Y[1,2](-pi/2) Z[1,-2](-pi/4) Y[1,2](pi/2)"},
        {"X2", "X[1,2](pi/4) Y[1,2](-pi/2) Z[1,-2](-pi/4) Y[1,2](pi/2)"},
        {"-X2", "X[1,2](-pi/4) Y[1,2](-pi/2) Z[1,-2](pi/4) Y[1,2](pi/2)"},
        {"Y1", "Y[1,2](pi/4) X[1,2](pi/2) Z[1,-2](pi/4) X[1,2](-pi/2)"},
        {"-Y1", "Y[1,2](-pi/4) X[1,2](pi/2) Z[1,-2](-pi/4) X[1,2](-pi/2)"},
        {"Y2", "Y[1,2](pi/4) X[1,2](pi/2) Z[1,-2](-pi/4) X[1,2](-pi/2)"},
        {"-Y2", "Y[1,2](-pi/4) X[1,2](pi/2) Z[1,-2](pi/4) X[1,2](-pi/2)"},
    };
    auto it = table.find(gate);
    if (it == table.end())
        throw std::invalid_argument("no hard-pulse composite for '" + gate + "'");
    return from_product(it->second, "hard:" + gate);
}

QuantumProgram grover4(CopyKind copy, int n)
{
    check_needle(n);
    QuantumProgram p;
    p.name = fmt::format("grover4-{}-{}", copy == CopyKind::xy ? "xy" : "cnot", n);
    p.then(prepare_u()).then(oracle(n));
    if (copy == CopyKind::xy)
        p.then(copy_xy(1, 3)).then(copy_xy(2, 4));
    else
        p.then(copy_cnot(1, 3)).then(copy_cnot(2, 4));
    p.then(remap(grover_query(), {{1, 3}, {2, 4}}, ""));
    return p;
}

std::vector<std::string> sequence_names()
{
    std::vector<std::string> names{"prepare-u", "prepare-u'", "G", "G-hat", "G-tilde"};
    for (int n = 0; n < 4; ++n) {
        names.push_back(fmt::format("F{}", n));
        names.push_back(fmt::format("U{}", n));
    }
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 3}, {2, 4}}) {
        names.push_back(fmt::format("cnot-{}-{}", s, t));
        names.push_back(fmt::format("copy-cnot-{}-{}", s, t));
        names.push_back(fmt::format("copy-xy-{}-{}", s, t));
    }
    for (const auto& g : hard_gates())
        names.push_back("hard:" + g);
    for (const char* c : {"xy", "cnot"})
        for (int n = 0; n < 4; ++n)
            names.push_back(fmt::format("grover4-{}-{}", c, n));
    return names;
}

QuantumProgram sequence_library(const std::string& name)
{
    if (name == "prepare-u")
        return prepare_u();
    if (name == "prepare-u'")
        return prepare_u_alt();
    if (name == "G")
        return grover_query();
    if (name == "G-hat")
        return grover_query_hat();
    if (name == "G-tilde")
        return grover_query_tilde();
    if (name.size() == 2 && (name[0] == 'F' || name[0] == 'U') && name[1] >= '0' && name[1] <= '3') {
        const int n = name[1] - '0';
        return name[0] == 'F' ? oracle(n) : grover_optimized(n);
    }
    if (name.rfind("hard:", 0) == 0)
        return hard_composite(name.substr(5));
    int s = 0, t = 0;
    char kind[8] = {};
    if (std::sscanf(name.c_str(), "cnot-%d-%d", &s, &t) == 2 && s != t && s > 0 && t > 0)
        return cnot(s, t);
    if (std::sscanf(name.c_str(), "copy-%4[a-z]-%d-%d", kind, &s, &t) == 3 && s != t && s > 0 && t > 0) {
        if (std::string(kind) == "cnot")
            return copy_cnot(s, t);
        if (std::string(kind) == "xy")
            return copy_xy(s, t);
    }
    if (std::sscanf(name.c_str(), "grover4-%4[a-z]-%d", kind, &s) == 2 && s >= 0 && s <= 3) {
        if (std::string(kind) == "cnot")
            return grover4(CopyKind::cnot, s);
        if (std::string(kind) == "xy")
            return grover4(CopyKind::xy, s);
    }
    throw std::invalid_argument("unknown sequence '" + name + "'");
}

ProgramLibrary full_library()
{
    ProgramLibrary lib;
    for (const auto& n : sequence_names())
        lib[n] = sequence_library(n);
    return lib;
}

Operator inversion_about_mean(int n)
{
    const Eigen::Index d = Eigen::Index(1) << n;
    CMatrix m = CMatrix::Constant(d, d, cplx(2.0 / static_cast<double>(d), 0.0));
    m -= CMatrix::Identity(d, d);
    return Operator(std::move(m));
}

}  // namespace qce
