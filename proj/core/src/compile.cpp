#include "qce/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qce/library.hpp"
#include "qce/program_text.hpp"

namespace qce {

namespace {

constexpr double kPi = std::numbers::pi;

double zeeman_strength(const MachineModel& m, int j)
{
    double h = 0.0;
    for (const auto& t : m.terms)
        if (t.kind == TermKind::zeeman_z && t.group.empty() && t.j == j)
            h += t.strength;
    return h;
}

bool is_quarter_turn(double a) { return std::abs(std::abs(a) - kPi / 2) < 1e-12; }

class Compiler {
public:
    Compiler(const MachineModel& m, const PulseTable& t) : m_(m), t_(t)
    {
        t_.validate();
        grid_ = t_.grid > 0.0 ? t_.grid : commensurate_grid(m_);
    }

    void gate(const Gate& g, QuantumProgram& out) const
    {
        if (g.angle == 0.0)
            return;
        for (int q : g.qubits)
            if (q < 1 || q > m_.n_qubits)
                throw std::invalid_argument("gate " + emit_gate(g) + " addresses a qubit outside machine '" +
                                            m_.name + "'");
        switch (g.kind) {
        case GateKind::zz_phase:
        case GateKind::xy_exchange:
            interaction(g, out);
            return;
        case GateKind::rotation:
            break;
        }
        if (g.axis == Axis::z) {
            free_z(g, out);
            return;
        }
        switch (t_.style) {
        case PulseStyle::resonant:
            resonant(g, out);
            return;
        case PulseStyle::rotating:
            rotating(g, out);
            return;
        case PulseStyle::hard:
            hard(g, out);
            return;
        }
    }

private:
    void interaction(const Gate& g, QuantumProgram& out) const
    {
        const bool zz = g.kind == GateKind::zz_phase;
        const Term* c = m_.coupling(g.qubits[0], g.qubits[1], zz ? TermKind::zz : TermKind::xy);
        if (!c)
            throw std::invalid_argument("machine '" + m_.name + "' has no " + (zz ? "zz" : "xy") +
                                        " coupling for " + emit_gate(g));
        // I(a) = exp(-i a SzSz) from H = -J SzSz needs J t = -a;
        // I'(a) = exp(i a (SxSx+SySy)) from H = -J (SxSx+SySy) needs J t = a.
        const double rate = zz ? -c->strength : c->strength;
        Pulse p;
        p.label = "free:" + emit_gate(g);
        p.duration = interaction_duration(g.angle, rate, grid_, t_.max_windings);
        p.machine_couplings = true;
        if (!c->group.empty())
            p.groups.insert(c->group);
        out.body.push_back(p);
    }

    void free_z(const Gate& g, QuantumProgram& out) const
    {
        // exp(i a sum s_k S_k^z) = exp(-i t H) with H = -sum h_k S_k^z needs h_k t = a s_k
        // for every listed spin, and spins not listed must not precess.
        double t = 0.0;
        bool first = true;
        for (int j = 1; j <= m_.n_qubits; ++j) {
            const double h = zeeman_strength(m_, j);
            double want = 0.0;
            for (std::size_t i = 0; i < g.qubits.size(); ++i)
                if (g.qubits[i] == j)
                    want = g.angle * g.signs[i];
            if (h == 0.0) {
                if (want != 0.0)
                    throw std::invalid_argument("spin " + std::to_string(j) + " does not precess; cannot realize " +
                                                emit_gate(g));
                continue;
            }
            const double tj = want / h;
            if (first) {
                t = tj;
                first = false;
            } else if (std::abs(tj - t) > 1e-12 * std::max(1.0, std::abs(t))) {
                throw std::invalid_argument(emit_gate(g) + " is not a free evolution of machine '" + m_.name + "'");
            }
        }
        if (first)
            throw std::invalid_argument("machine '" + m_.name + "' has no Zeeman terms for " + emit_gate(g));
        if (t < 0.0) {
            if (grid_ <= 0.0)
                throw std::invalid_argument("negative free evolution for " + emit_gate(g) + " and no period to add");
            t += grid_ * std::ceil(-t / grid_);
        }
        Pulse p;
        p.label = "free:" + emit_gate(g);
        p.duration = t;
        p.machine_couplings = t_.style == PulseStyle::hard ? t_.couplings_during_free : true;
        out.body.push_back(p);
    }

    int local_target(int j) const
    {
        const auto pr = m_.pair_of(j);
        return pr[0] == j ? 1 : 2;
    }

    double phase_for(const Gate& g) const
    {
        const double base = g.axis == Axis::x ? t_.phase_x : t_.phase_y;
        return g.angle < 0 ? base + kPi : base;
    }

    void single_target_check(const Gate& g, const char* style) const
    {
        if (g.qubits.size() != 1 || g.signs[0] != 1)
            throw std::invalid_argument(std::string(style) + " pulses realize single-qubit rotations only, not " +
                                        emit_gate(g));
    }

    void resonant(const Gate& g, QuantumProgram& out) const
    {
        single_target_check(g, "resonant");
        if (!is_quarter_turn(g.angle))
            throw std::invalid_argument("resonant pulses realize +-90 degree rotations only, not " + emit_gate(g));
        const int j = g.qubits[0];
        const auto pr = m_.pair_of(j);
        const TargetEntry& e = t_.target(local_target(j));
        const double f = e.frequency ? *e.frequency : zeeman_strength(m_, j);
        Pulse p;
        p.label = "res:" + emit_gate(g);
        p.duration = e.duration;
        p.machine_couplings = true;
        for (int i = 0; i < 2; ++i)
            if (e.amplitudes[i] != 0.0)
                p.drive.push_back(sinusoidal_drive(pr[i], e.amplitudes[i], t_.drive_axis, f, phase_for(g)));
        out.body.push_back(p);
    }

    void rotating(const Gate& g, QuantumProgram& out) const
    {
        single_target_check(g, "rotating-field");
        const int j = g.qubits[0];
        const TargetEntry& e = t_.target(local_target(j));
        const double w = e.frequency ? *e.frequency : zeeman_strength(m_, j);
        Pulse p;
        p.label = "rot:" + emit_gate(g);
        p.duration = e.duration;
        p.machine_couplings = true;
        p.drive.push_back(rotating_drive(j, std::abs(g.angle) / e.duration, -w, phase_for(g)));
        out.body.push_back(p);
    }

    void hard(const Gate& g, QuantumProgram& out) const
    {
        if (g.qubits.size() == 1 && g.signs[0] == 1 && is_quarter_turn(g.angle)) {
            const std::string name = std::string(g.angle < 0 ? "-" : "") + (g.axis == Axis::x ? "X" : "Y") +
                                     std::to_string(g.qubits[0]);
            if (g.qubits[0] > 2)
                throw std::invalid_argument("hard-pulse composites exist for qubits 1 and 2 only");
            for (const auto& mi : hard_composite(name).body)
                gate(std::get<Gate>(mi), out);
            return;
        }
        // exp(i a sum s_k S_k^x) = exp(-i t H) with H = -h sum s_k sign(a) S_k^x, t = |a| / h
        const double h = t_.hard_field;
        Pulse p;
        p.label = "hard:" + emit_gate(g);
        p.duration = std::abs(g.angle) / h;
        p.machine_couplings = t_.couplings_during_pulses;
        const double sgn = g.angle < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
            p.drive.push_back(static_field(g.qubits[i], g.axis, sgn * g.signs[i] * h));
        out.body.push_back(p);
    }

    const MachineModel& m_;
    const PulseTable& t_;
    double grid_ = 0.0;
};

}  // namespace

double commensurate_grid(const MachineModel& m)
{
    std::vector<double> periods;
    for (int j = 1; j <= m.n_qubits; ++j) {
        const double h = zeeman_strength(m, j);
        if (h != 0.0)
            periods.push_back(2 * kPi / std::abs(h));
    }
    if (periods.empty())
        return 0.0;
    const double base = *std::max_element(periods.begin(), periods.end());
    for (int k = 1; k <= 100000; ++k) {
        const double t = k * base;
        bool ok = true;
        for (double p : periods) {
            const double r = t / p;
            if (std::abs(r - std::round(r)) > 1e-9 * std::max(1.0, r)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return t;
    }
    throw std::invalid_argument("machine '" + m.name + "': precession periods have no common multiple; set a grid");
}

double interaction_duration(double angle, double rate, double grid, int max_windings)
{
    if (rate == 0.0)
        throw std::invalid_argument("interaction with zero coupling strength");
    const double r = std::abs(rate);
    double a = rate < 0 ? -angle : angle;
    a = std::fmod(a, 4 * kPi);
    if (a <= 0.0)
        a += 4 * kPi;
    if (grid <= 0.0)
        return a / r;
    double best_t = 0.0, best_err = INFINITY;
    for (int k = 0; k <= max_windings; ++k) {
        const double phi = a + 4 * kPi * k;
        const double t = grid * std::max(1.0, std::round(phi / r / grid));
        const double err = std::abs(r * t - phi);
        if (err < best_err - 1e-15) {
            best_err = err;
            best_t = t;
        }
    }
    return best_t;
}

QuantumProgram compile_physical(const QuantumProgram& p, const MachineModel& m, const PulseTable& table,
                                const ProgramLibrary& lib)
{
    m.validate();
    const QuantumProgram flat = flatten(p, lib);
    Compiler c(m, table);
    QuantumProgram out;
    out.name = p.name;
    for (const auto& mi : flat.body) {
        if (const auto* g = std::get_if<Gate>(&mi))
            c.gate(*g, out);
        else
            out.body.push_back(mi);
    }
    return out;
}

}  // namespace qce
