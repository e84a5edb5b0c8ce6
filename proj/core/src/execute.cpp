#include "qce/execute.hpp"

#include <stdexcept>

#include "qce/compile.hpp"
#include "qce/library.hpp"

namespace qce {

DrivenHamiltonian pulse_hamiltonian(const MachineModel& m, const Pulse& p)
{
    MachineModel base = m;
    std::erase_if(base.terms, [&](const Term& t) {
        if (!t.group.empty())
            return !p.groups.count(t.group);
        return t.two_site() && !p.machine_couplings;
    });
    DrivenHamiltonian h(base, p.groups);
    for (const auto& t : p.drive) {
        if (t.j < 1 || t.j > m.n_qubits || (t.two_site() && (t.k < 1 || t.k > m.n_qubits)))
            throw std::invalid_argument("pulse '" + p.label + "' drives a qubit outside machine '" + m.name + "'");
        h.add(t, m.n_qubits);
    }
    return h;
}

Executor::Executor(MachineModel m, std::optional<PulseTable> table, PropagationPlan plan, ProgramLibrary lib)
    : m_(std::move(m)), table_(std::move(table)), plan_(plan), lib_(std::move(lib))
{
    m_.validate();
    if (table_)
        table_->validate();
    if (lib_.empty())
        lib_ = full_library();
}

QuantumProgram Executor::lower(const QuantumProgram& p, Mode mode) const
{
    if (mode == Mode::ideal) {
        QuantumProgram flat = flatten(p, lib_);
        for (const auto& mi : flat.body)
            if (std::holds_alternative<Pulse>(mi))
                throw std::invalid_argument("program '" + p.name + "' contains pulses and cannot run in ideal mode");
        return flat;
    }
    if (!table_)
        throw std::invalid_argument("physical mode needs a pulse table");
    return compile_physical(p, m_, *table_, lib_);
}

CMatrix Executor::pulse_propagator(const Pulse& p)
{
    const std::string key = p.key();
    {
        std::lock_guard lk(mu_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    if (!(p.duration > 0.0))
        throw std::invalid_argument("pulse '" + p.label + "' has non-positive duration");
    const DrivenHamiltonian h = pulse_hamiltonian(m_, p);
    CMatrix u = h.is_static() ? propagator_static(h.static_part(), p.duration)
                              : propagator_timedep(h, 0.0, p.duration, plan_);
    std::lock_guard lk(mu_);
    cache_.emplace(key, u);
    return u;
}

std::size_t Executor::cache_size() const
{
    std::lock_guard lk(mu_);
    return cache_.size();
}

CMatrix Executor::step(const MicroInstruction& mi, Mode mode)
{
    if (const auto* g = std::get_if<Gate>(&mi)) {
        if (mode != Mode::ideal)
            throw std::logic_error("uncompiled gate in physical mode");
        return ideal_gate_matrix(*g, m_.n_qubits).matrix();
    }
    if (const auto* p = std::get_if<Pulse>(&mi)) {
        if (mode != Mode::physical)
            throw std::invalid_argument("pulse '" + p->label + "' in ideal mode");
        return pulse_propagator(*p);
    }
    throw std::logic_error("unresolved call after lowering");
}

Operator Executor::unitary(const QuantumProgram& p, Mode mode)
{
    const QuantumProgram low = lower(p, mode);
    const Eigen::Index d = Eigen::Index(1) << m_.n_qubits;
    CMatrix u = CMatrix::Identity(d, d);
    for (const auto& mi : low.body)
        u = step(mi, mode) * u;
    return Operator(std::move(u));
}

StateVector Executor::run(const QuantumProgram& p, const StateVector& s, Mode mode)
{
    if (s.n_qubits() != m_.n_qubits)
        throw std::invalid_argument("state has " + std::to_string(s.n_qubits()) + " qubits, machine '" + m_.name +
                                    "' has " + std::to_string(m_.n_qubits));
    const QuantumProgram low = lower(p, mode);
    CVector v = s.amplitudes();
    for (const auto& mi : low.body)
        v = step(mi, mode) * v;
    return StateVector(std::move(v));
}

DensityMatrix Executor::run_master(const QuantumProgram& p, const DensityMatrix& rho, const BathSpec& bath,
                                   const TrajectoryObserver& observer, int samples)
{
    if (rho.n_qubits() != m_.n_qubits)
        throw std::invalid_argument("density matrix does not match machine '" + m_.name + "'");
    const QuantumProgram low = lower(p, Mode::physical);
    DensityMatrix r = rho;
    double t0 = 0.0;
    if (observer)
        observer(0.0, measure(r));
    for (const auto& mi : low.body) {
        const auto& pulse = std::get<Pulse>(mi);
        const DrivenHamiltonian h = pulse_hamiltonian(m_, pulse);
        RhoObserver inner;
        if (observer)
            inner = [&](double t, const CMatrix& x) { observer(t0 + t, measure(DensityMatrix(x))); };
        r = propagate_master(r, h, bath, 0.0, pulse.duration, plan_, inner, samples);
        t0 += pulse.duration;
    }
    return r;
}

StateVector execute(const QuantumProgram& p, const StateVector& s, const MachineModel& m, Mode mode,
                    const std::optional<PulseTable>& table, const PropagationPlan& plan)
{
    Executor ex(m, table, plan);
    return ex.run(p, s, mode);
}

}  // namespace qce
