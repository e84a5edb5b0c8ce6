#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qce/instruction.hpp"

namespace qce {

// Operator-product notation: whitespace separated factors, rightmost acts
// first. Each factor is one statement of the program text format, so
// "X1 -Y1 I(pi)" runs I(pi), then -Y1, then X1.
QuantumProgram from_product(std::string_view notation, const std::string& name);

// Needle position n in 0..3 selects the signs of the two X rotations:
// n = 0 (X1, X2), 1 (X1, -X2), 2 (-X1, X2), 3 (-X1, -X2).
QuantumProgram prepare_u();
QuantumProgram prepare_u_alt();
QuantumProgram oracle(int n);
QuantumProgram grover_query();
QuantumProgram grover_query_hat();
QuantumProgram grover_query_tilde();
QuantumProgram grover_optimized(int n);

// Controlled-NOT with control s and target t, up to phases.
QuantumProgram cnot(int s, int t);
// Move qubit s into qubit t (t starts in |0>); s ends in |0>.
QuantumProgram copy_cnot(int s, int t);
QuantumProgram copy_xy(int s, int t);

// Single-qubit +-90 degree rotations built from two-spin pulses and free
// z evolution. gate is one of X1, -X1, X2, -X2, Y1, -Y1, Y2, -Y2.
QuantumProgram hard_composite(const std::string& gate);

// prepare u on (1,2), oracle n on (1,2), copy 1->3 and 2->4, query on (3,4)
QuantumProgram grover4(CopyKind copy, int n);

QuantumProgram sequence_library(const std::string& name);
std::vector<std::string> sequence_names();
ProgramLibrary full_library();

// 2/N sum|i><j| - 1 on n qubits
Operator inversion_about_mean(int n_qubits);

}  // namespace qce
