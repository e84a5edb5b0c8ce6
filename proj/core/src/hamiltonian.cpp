#include "qce/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qce {

namespace {

struct KindName {
    TermKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {TermKind::zz, "zz"},
    {TermKind::xy, "xy"},
    {TermKind::zeeman_z, "zeeman_z"},
    {TermKind::static_x, "static_x"},
    {TermKind::static_y, "static_y"},
    {TermKind::sinusoidal, "sinusoidal"},
    {TermKind::rotating, "rotating"},
};

}  // namespace

std::string_view term_kind_name(TermKind k)
{
    for (const auto& kn : kKindNames)
        if (kn.kind == k)
            return kn.name;
    return "?";
}

TermKind term_kind_from_name(std::string_view s)
{
    for (const auto& kn : kKindNames)
        if (kn.name == s)
            return kn.kind;
    throw std::invalid_argument("unknown term kind '" + std::string(s) + "'");
}

CMatrix Term::cos_part(int n) const
{
    switch (kind) {
    case TermKind::sinusoidal:
        return -strength * spin_matrix(j, axis, n);
    case TermKind::rotating:
        return -strength * spin_matrix(j, Axis::x, n);
    default:
        throw std::logic_error("cos_part on a static term");
    }
}

CMatrix Term::sin_part(int n) const
{
    switch (kind) {
    case TermKind::sinusoidal: {
        const Eigen::Index d = Eigen::Index(1) << n;
        return CMatrix::Zero(d, d);
    }
    case TermKind::rotating:
        return -strength * spin_matrix(j, Axis::y, n);
    default:
        throw std::logic_error("sin_part on a static term");
    }
}

CMatrix Term::matrix(int n, double t) const
{
    switch (kind) {
    case TermKind::zz:
        return -strength * spin_matrix(j, Axis::z, n) * spin_matrix(k, Axis::z, n);
    case TermKind::xy:
        return -strength * (spin_matrix(j, Axis::x, n) * spin_matrix(k, Axis::x, n) +
                            spin_matrix(j, Axis::y, n) * spin_matrix(k, Axis::y, n));
    case TermKind::zeeman_z:
        return -strength * spin_matrix(j, Axis::z, n);
    case TermKind::static_x:
        return -strength * spin_matrix(j, Axis::x, n);
    case TermKind::static_y:
        return -strength * spin_matrix(j, Axis::y, n);
    case TermKind::sinusoidal:
    case TermKind::rotating: {
        const double a = frequency * t + phase;
        return std::cos(a) * cos_part(n) + std::sin(a) * sin_part(n);
    }
    }
    throw std::logic_error("unhandled term kind");
}

Term zz_term(int j, int k, double J, std::string group)
{
    Term t;
    t.kind = TermKind::zz;
    t.j = j;
    t.k = k;
    t.strength = J;
    t.group = std::move(group);
    return t;
}

Term xy_term(int j, int k, double J, std::string group)
{
    Term t = zz_term(j, k, J, std::move(group));
    t.kind = TermKind::xy;
    return t;
}

Term zeeman_term(int j, double h)
{
    Term t;
    t.kind = TermKind::zeeman_z;
    t.j = j;
    t.strength = h;
    return t;
}

Term static_field(int j, Axis axis, double h)
{
    if (axis == Axis::z)
        return zeeman_term(j, h);
    Term t;
    t.kind = axis == Axis::x ? TermKind::static_x : TermKind::static_y;
    t.j = j;
    t.strength = h;
    return t;
}

Term sinusoidal_drive(int j, double h, Axis axis, double frequency, double phase)
{
    if (axis == Axis::z)
        throw std::invalid_argument("sinusoidal drive must be transverse");
    Term t;
    t.kind = TermKind::sinusoidal;
    t.j = j;
    t.strength = h;
    t.axis = axis;
    t.frequency = frequency;
    t.phase = phase;
    return t;
}

Term rotating_drive(int j, double h, double frequency, double phase)
{
    Term t;
    t.kind = TermKind::rotating;
    t.j = j;
    t.strength = h;
    t.frequency = frequency;
    t.phase = phase;
    return t;
}

void MachineModel::validate() const
{
    if (n_qubits < 1 || n_qubits > 12)
        throw std::invalid_argument("machine '" + name + "': qubit count out of range");
    for (const auto& t : terms) {
        auto bad = [&](int q) { return q < 1 || q > n_qubits; };
        if (bad(t.j) || (t.two_site() && (bad(t.k) || t.k == t.j)))
            throw std::invalid_argument("machine '" + name + "': term '" +
                                        std::string(term_kind_name(t.kind)) + "' has bad qubit index");
        if (!std::isfinite(t.strength) || !std::isfinite(t.frequency) || !std::isfinite(t.phase))
            throw std::invalid_argument("machine '" + name + "': non-finite term parameter");
    }
    for (const auto& p : pairs)
        if (p[0] < 1 || p[0] > n_qubits || p[1] < 1 || p[1] > n_qubits || p[0] == p[1])
            throw std::invalid_argument("machine '" + name + "': bad addressing pair");
}

std::set<std::string> MachineModel::groups() const
{
    std::set<std::string> g;
    for (const auto& t : terms)
        if (!t.group.empty())
            g.insert(t.group);
    return g;
}

bool MachineModel::has_time_dependence() const
{
    for (const auto& t : terms)
        if (t.time_dependent())
            return true;
    return false;
}

std::array<int, 2> MachineModel::pair_of(int j) const
{
    for (const auto& p : pairs)
        if (p[0] == j || p[1] == j)
            return p;
    throw std::invalid_argument("machine '" + name + "': qubit " + std::to_string(j) +
                                " is not in an addressable pair");
}

const Term* MachineModel::coupling(int j, int k, TermKind kind) const
{
    for (const auto& t : terms)
        if (t.kind == kind && ((t.j == j && t.k == k) || (t.j == k && t.k == j)))
            return &t;
    return nullptr;
}

Operator assemble(const MachineModel& m, double t, const std::set<std::string>& active)
{
    const Eigen::Index d = Eigen::Index(1) << m.n_qubits;
    CMatrix h = CMatrix::Zero(d, d);
    for (const auto& term : m.terms)
        if (term.group.empty() || active.count(term.group))
            h += term.matrix(m.n_qubits, t);
    return Operator(std::move(h));
}

// The frame |Phi> = exp(i t w sum_j S_j^z / 2)|Psi> lowers every Zeeman strength by
// w/2 and advances every circular component by w/2. Linear drives are split
// into two counter-rotating circular halves first.
MachineModel to_rotating_frame(const MachineModel& m, double w)
{
    if (m.frame == Frame::rotating)
        throw std::invalid_argument("machine '" + m.name + "' is already in a rotating frame");
    MachineModel r = m;
    r.frame = Frame::rotating;
    r.omega_frame = w;
    if (w == 0.0)
        return r;
    constexpr double half_pi = std::numbers::pi / 2;
    const double dw = w / 2;
    r.terms.clear();
    std::set<int> shifted;
    for (const auto& t : m.terms)
        if (t.kind == TermKind::zeeman_z && t.group.empty())
            shifted.insert(t.j);
    for (int j = 1; j <= m.n_qubits; ++j)
        if (!shifted.count(j))
            r.terms.push_back(zeeman_term(j, -dw));
    shifted.clear();
    for (const auto& t : m.terms) {
        switch (t.kind) {
        case TermKind::zz:
        case TermKind::xy:
            r.terms.push_back(t);
            break;
        case TermKind::zeeman_z: {
            Term z = t;
            if (t.group.empty() && shifted.insert(t.j).second)
                z.strength = t.strength - dw;
            r.terms.push_back(z);
            break;
        }
        case TermKind::static_x:
        case TermKind::static_y: {
            Term c = rotating_drive(t.j, t.strength, dw, t.kind == TermKind::static_x ? 0.0 : half_pi);
            c.group = t.group;
            r.terms.push_back(c);
            break;
        }
        case TermKind::rotating: {
            Term c = t;
            c.frequency += dw;
            r.terms.push_back(c);
            break;
        }
        case TermKind::sinusoidal: {
            Term a, b;
            if (t.axis == Axis::x) {
                a = rotating_drive(t.j, t.strength / 2, t.frequency + dw, t.phase);
                b = rotating_drive(t.j, t.strength / 2, -t.frequency + dw, -t.phase);
            } else {
                a = rotating_drive(t.j, t.strength / 2, t.frequency + dw, t.phase + half_pi);
                b = rotating_drive(t.j, t.strength / 2, -t.frequency + dw, half_pi - t.phase);
            }
            a.group = b.group = t.group;
            r.terms.push_back(a);
            r.terms.push_back(b);
            break;
        }
        }
    }
    // drop Zeeman terms that became exactly zero
    std::erase_if(r.terms, [](const Term& t) { return t.kind == TermKind::zeeman_z && t.strength == 0.0; });
    return r;
}

std::string group_name(int j, int k) { return "copy" + std::to_string(j) + std::to_string(k); }

MachineModel chloroform2()
{
    MachineModel m;
    m.name = "chloroform2";
    m.n_qubits = 2;
    m.terms = {zz_term(1, 2, -1e-6), zeeman_term(1, 1.0), zeeman_term(2, 0.25)};
    m.constants = {{"J_z", -1e-6}, {"hz_g1", 1.0}, {"hz_g2", 0.25}};
    m.notes = {{"larmor_1", "500 MHz (1H)"}, {"larmor_2", "125 MHz (13C)"}, {"J", "-215 Hz"},
               {"units", "dimensionless, hbar = 1, spin-1 Larmor frequency = 1"}};
    m.pairs = {{1, 2}};
    return m;
}

MachineModel cytosine2()
{
    constexpr double half_omega = 1.0;
    const double jz = -0.01887 * std::numbers::pi * (2 * half_omega);
    MachineModel m;
    m.name = "cytosine2";
    m.n_qubits = 2;
    m.terms = {zz_term(1, 2, jz), zeeman_term(1, half_omega), zeeman_term(2, -half_omega)};
    m.constants = {{"J_z", jz}, {"Omega", 2 * half_omega}, {"J_z_over_pi_Omega", -0.01887}};
    m.notes = {{"system", "two 1H spins, deuterated cytosine in D2O"},
               {"frame", "rotating at the mean Larmor frequency"}};
    m.frame = Frame::rotating;
    m.pairs = {{1, 2}};
    return m;
}

MachineModel twin_ising4(CopyKind copy, double s)
{
    MachineModel m;
    m.n_qubits = 4;
    m.terms = {zz_term(1, 2, -1e-6), zz_term(3, 4, -1e-6), zeeman_term(1, 1.0), zeeman_term(2, 0.25),
               zeeman_term(3, 1.0), zeeman_term(4, 0.25)};
    if (copy == CopyKind::xy) {
        m.name = "twin-ising4-xy";
        m.terms.push_back(xy_term(1, 3, s, group_name(1, 3)));
        m.terms.push_back(xy_term(2, 4, s, group_name(2, 4)));
        m.constants["J_xy"] = s;
    } else {
        m.name = "twin-ising4-cnot";
        m.terms.push_back(zz_term(1, 3, -s, group_name(1, 3)));
        m.terms.push_back(zz_term(2, 4, -s, group_name(2, 4)));
        m.constants["J_copy"] = -s;
    }
    m.constants["J_z"] = -1e-6;
    m.constants["hz_g1"] = 1.0;
    m.constants["hz_g2"] = 0.25;
    m.notes = {{"layout", "database pair (1,2), query pair (3,4)"},
               {"copy", "copy couplings are switched on only while a copy interaction runs"}};
    m.pairs = {{1, 2}, {3, 4}};
    return m;
}

std::vector<std::string> preset_names()
{
    return {"chloroform2", "cytosine2", "twin-ising4-xy", "twin-ising4-cnot"};
}

MachineModel preset(std::string_view name)
{
    if (name == "chloroform2")
        return chloroform2();
    if (name == "cytosine2")
        return cytosine2();
    if (name == "twin-ising4-xy")
        return twin_ising4(CopyKind::xy);
    if (name == "twin-ising4-cnot")
        return twin_ising4(CopyKind::cnot);
    throw std::invalid_argument("unknown machine preset '" + std::string(name) + "'");
}

}  // namespace qce
