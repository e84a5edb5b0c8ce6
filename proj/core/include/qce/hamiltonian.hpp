#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qce/state.hpp"

namespace qce {

// Every kind carries an overall minus sign:
//   zz          -J   S_j^z S_k^z
//   xy          -J  (S_j^x S_k^x + S_j^y S_k^y)
//   zeeman_z    -h   S_j^z
//   static_x    -h   S_j^x
//   static_y    -h   S_j^y
//   sinusoidal  -h   S_j^axis cos(f t + phase)
//   rotating    -h  (S_j^x cos(f t + phase) + S_j^y sin(f t + phase))
enum class TermKind { zz, xy, zeeman_z, static_x, static_y, sinusoidal, rotating };

std::string_view term_kind_name(TermKind k);
TermKind term_kind_from_name(std::string_view s);

struct Term {
    TermKind kind = TermKind::zeeman_z;
    int j = 1;
    int k = 0;
    double strength = 0.0;
    Axis axis = Axis::y;
    double frequency = 0.0;
    double phase = 0.0;
    std::string group;  // empty: always on; otherwise switched on by name

    bool two_site() const { return kind == TermKind::zz || kind == TermKind::xy; }
    bool time_dependent() const { return kind == TermKind::sinusoidal || kind == TermKind::rotating; }

    CMatrix matrix(int n_qubits, double t) const;
    // H(t) = cos(f t + phase) * cos_part + sin(f t + phase) * sin_part for driven kinds
    CMatrix cos_part(int n_qubits) const;
    CMatrix sin_part(int n_qubits) const;

    bool operator==(const Term&) const = default;
};

Term zz_term(int j, int k, double J, std::string group = {});
Term xy_term(int j, int k, double J, std::string group = {});
Term zeeman_term(int j, double h);
Term static_field(int j, Axis axis, double h);
Term sinusoidal_drive(int j, double h, Axis axis, double frequency, double phase);
Term rotating_drive(int j, double h, double frequency, double phase);

enum class Frame { laboratory, rotating };

struct MachineModel {
    std::string name;
    int n_qubits = 2;
    std::vector<Term> terms;
    std::map<std::string, double> constants;
    std::map<std::string, std::string> notes;
    Frame frame = Frame::laboratory;
    double omega_frame = 0.0;
    std::vector<std::array<int, 2>> pairs;  // independently addressable qubit pairs

    void validate() const;
    std::set<std::string> groups() const;
    bool has_time_dependence() const;
    // pair containing qubit j; throws when j is not in any pair
    std::array<int, 2> pair_of(int j) const;
    // coupling term between j and k of the given kind, or nullptr
    const Term* coupling(int j, int k, TermKind kind) const;

    bool operator==(const MachineModel&) const = default;
};

Operator assemble(const MachineModel& m, double t, const std::set<std::string>& active = {});

MachineModel to_rotating_frame(const MachineModel& m, double omega_frame);

enum class CopyKind { xy, cnot };

MachineModel preset(std::string_view name);
std::vector<std::string> preset_names();

MachineModel chloroform2();
MachineModel cytosine2();
MachineModel twin_ising4(CopyKind copy, double copy_strength = 1e-3);

std::string group_name(int j, int k);

}  // namespace qce
