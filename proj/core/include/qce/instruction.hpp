#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qce/hamiltonian.hpp"
#include "qce/state.hpp"

namespace qce {

enum class Mode { ideal, physical };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

enum class GateKind {
    rotation,     // exp(i angle sum_k sign_k S_{q_k}^axis)
    zz_phase,     // I(angle) = exp(-i angle S_j^z S_k^z)
    xy_exchange,  // I'(angle) = exp(i angle (S_j^x S_k^x + S_j^y S_k^y))
};

struct Gate {
    GateKind kind = GateKind::rotation;
    Axis axis = Axis::x;
    std::vector<int> qubits;
    std::vector<int> signs;  // rotation only, +1 or -1 per qubit
    double angle = 0.0;

    bool operator==(const Gate&) const = default;
};

Gate rot(Axis axis, int j, double angle);
Gate rot(Axis axis, std::vector<int> qubits, std::vector<int> signs, double angle);
Gate X(int j, bool inverse = false);
Gate Y(int j, bool inverse = false);
Gate I_phase(int j, int k, double angle);
Gate I_xy(int j, int k, double angle);

// A stretch of Hamiltonian evolution: the machine terms (optionally without
// couplings), the listed extra drive terms, switchable groups, and a duration.
// Drive terms see local time running from 0 to duration.
struct Pulse {
    std::string label;
    std::vector<Term> drive;
    double duration = 0.0;
    bool machine_couplings = true;
    std::set<std::string> groups;

    std::string key() const;
    bool operator==(const Pulse&) const = default;
};

struct Call {
    std::string name;
    bool operator==(const Call&) const = default;
};

using MicroInstruction = std::variant<Gate, Pulse, Call>;

struct QuantumProgram {
    std::string name;
    std::vector<MicroInstruction> body;  // execution order: body[0] acts first

    std::size_t size() const { return body.size(); }
    QuantumProgram& then(const QuantumProgram& p);
    QuantumProgram& then(MicroInstruction mi);
    QuantumProgram repeated(int times) const;
};

using ProgramLibrary = std::map<std::string, QuantumProgram>;

Operator ideal_gate_matrix(const Gate& g, int n_qubits);
bool is_inverse_pair(const Gate& a, const Gate& b);

// Relabel qubits; every qubit index q becomes map.at(q).
Gate remap(const Gate& g, const std::map<int, int>& map);
QuantumProgram remap(const QuantumProgram& p, const std::map<int, int>& map, const std::string& name);

// Inline all calls against the library; throws on unknown names or cycles.
QuantumProgram flatten(const QuantumProgram& p, const ProgramLibrary& lib);

int max_qubit(const QuantumProgram& p);

}  // namespace qce
