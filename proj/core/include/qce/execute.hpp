#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qce/evolution.hpp"
#include "qce/hamiltonian.hpp"
#include "qce/instruction.hpp"
#include "qce/pulse_table.hpp"

namespace qce {

// Hamiltonian seen during a pulse: machine terms (grouped ones only when the
// pulse activates the group, couplings dropped when the pulse says so) plus
// the pulse's drive terms.
DrivenHamiltonian pulse_hamiltonian(const MachineModel& m, const Pulse& p);

using TrajectoryObserver = std::function<void(double t, const MeasurementRecord& r)>;

// Runs programs on one machine. Pulse propagators are cached by Pulse::key;
// the cache is guarded, so an Executor may be shared between threads.
class Executor {
public:
    explicit Executor(MachineModel m, std::optional<PulseTable> table = std::nullopt, PropagationPlan plan = {},
                      ProgramLibrary lib = {});

    const MachineModel& machine() const { return m_; }
    const PropagationPlan& plan() const { return plan_; }
    const std::optional<PulseTable>& table() const { return table_; }

    // Inline calls; in physical mode also replace gates by pulses.
    QuantumProgram lower(const QuantumProgram& p, Mode mode) const;

    Operator unitary(const QuantumProgram& p, Mode mode);
    StateVector run(const QuantumProgram& p, const StateVector& s, Mode mode);

    // Density-matrix execution in physical mode. The observer receives the
    // readout after every pulse and at `samples` interior points of each.
    DensityMatrix run_master(const QuantumProgram& p, const DensityMatrix& rho, const BathSpec& bath,
                             const TrajectoryObserver& observer = {}, int samples = 0);

    CMatrix pulse_propagator(const Pulse& p);
    std::size_t cache_size() const;

private:
    CMatrix step(const MicroInstruction& mi, Mode mode);

    MachineModel m_;
    std::optional<PulseTable> table_;
    PropagationPlan plan_;
    ProgramLibrary lib_;
    mutable std::mutex mu_;
    std::map<std::string, CMatrix> cache_;
};

StateVector execute(const QuantumProgram& p, const StateVector& s, const MachineModel& m, Mode mode,
                    const std::optional<PulseTable>& table = std::nullopt, const PropagationPlan& plan = {});

}  // namespace qce
