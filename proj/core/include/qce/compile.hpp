#pragma once

#include "qce/hamiltonian.hpp"
#include "qce/instruction.hpp"
#include "qce/pulse_table.hpp"

namespace qce {

// Least common multiple of the precession periods 2 pi / |h_j| of all Zeeman
// terms; 0 when no spin precesses.
double commensurate_grid(const MachineModel& m);

// Duration t > 0 with rate * t = angle (mod 4 pi), snapped to the grid.
// Candidates angle + 4 pi k, k = 0..max_windings, compete on residual phase
// error; ties go to the shorter one.
double interaction_duration(double angle, double rate, double grid, int max_windings);

// Replace every gate by pulses. Calls are resolved against lib first.
QuantumProgram compile_physical(const QuantumProgram& p, const MachineModel& m, const PulseTable& table,
                                const ProgramLibrary& lib = {});

}  // namespace qce
