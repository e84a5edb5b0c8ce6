#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qce/evolution.hpp"
#include "qce/execute.hpp"
#include "qce/instruction.hpp"
#include "qce/pulse_table.hpp"

namespace qce {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    int samples = 20000;
    double confidence = 0.7;
    PropagationPlan plan;
    std::optional<Mode> mode;               // only rows of this mode
    std::optional<PulseTable> pulse_table;  // replaces the built-in calibration
};

struct QRow {
    std::string run_id;
    Mode mode = Mode::ideal;
    int n = 0;
    std::vector<double> q;      // reported qubits only
    std::vector<double> published_q;  // published values, empty when none
    std::size_t argmax = 0;     // most probable pattern on the reported qubits
    std::size_t expected = 0;

    bool argmax_ok() const { return argmax == expected; }
    // max |q - published_q|, or -1 without published values
    double published_deviation() const;
};

struct TableReport {
    int id = 0;
    std::string title;
    std::vector<int> qubits;
    std::vector<QRow> rows;

    std::vector<const QRow*> select(std::string_view run_id) const;
};

TableReport run_table(int id, const ExperimentConfig& cfg = {});

// |Psi'> = alpha_0 |Psi_n> + sum_i alpha_i |Psi_m_i> over the other three
// marked states. alpha_0 is uniform on [-1, 1]; the rest is isotropic on the
// sphere of radius sqrt(1 - alpha_0^2) in R^6. Stream: mt19937_64(seed + index).
struct StabilitySample {
    double alpha0 = 0.0;
    std::array<cplx, 3> alpha{};
    StateVector psi;
    double x = 0.0;
};
StabilitySample sample_random_input(std::uint64_t seed, std::uint64_t index, int n);
StabilitySample input_from_coefficients(double alpha0, const std::array<cplx, 3>& alpha, int n);

struct ScatterPoint {
    double x = 0.0, y = 0.0;
    bool good = false;
};

struct ScatterResult {
    std::vector<ScatterPoint> points;
    std::size_t good = 0;
    int n = 0;
    Mode mode = Mode::physical;
    double confidence = 0.7;
    double exact_input_y = 0.0;  // y for alpha_0 = 1
    double max_y_high_x = 0.0;   // over samples with x^2 > 0.9
    double high_x_bound = 1.0;   // largest y reachable with x^2 > 0.9 given exact_input_y
};

// y for |x| >= a when the exact input gives y0: cos(acos(a) - acos(y0)), or 1.
double stability_bound(double y0, double a);

ScatterResult run_stability_scatter(const ExperimentConfig& cfg, int n = 0);

struct DissipationConfig {
    double lambda = 1e-5;
    double beta = 100.0;
    double I0 = 1.0;
    int samples = 20;  // trajectory points inside each pulse
    PropagationPlan plan{0.0025, 0.01};
    std::optional<PulseTable> pulse_table;
};

struct DissipationResult {
    std::vector<double> t;
    std::vector<std::vector<double>> q;
    std::vector<double> final_q;
    std::vector<double> pure_q;  // same program, state-vector path
    double lambda = 0.0;
};

// U_2 |u'> on chloroform2 with the optimized resonant pulses under the bath
// C = sum_j (S_j^x + S_j^z) / 2.
DissipationResult run_dissipation(const DissipationConfig& cfg);

struct Grover4Report {
    CopyKind copy = CopyKind::xy;
    std::string pulses;
    std::vector<QRow> rows;
    std::vector<std::array<double, 2>> database;  // Q_1, Q_2 after the run, per row
};

Grover4Report run_grover4(CopyKind copy, const std::string& pulses, const ExperimentConfig& cfg = {});

struct OraclePoint {
    double omega = 0.0, hg = 0.0, t = 0.0, analytic = 0.0, numeric = 0.0;
};
struct OracleReport {
    std::vector<OraclePoint> points;
    double max_error = 0.0;
};

// Single spin under -(Omega/2) S^z - h g S^x, started in |0>.
OracleReport run_oracle_check(std::uint64_t seed, int points = 1000);

namespace published {
// Q pairs per needle position as printed, (Q_a, Q_b) for n = 0..3.
using QSet = std::array<std::array<double, 2>, 4>;
extern const QSet table1_hat, table1_tilde, table1_hat_opt, table1_tilde_opt;
extern const QSet table3_hat, table3_tilde;
extern const QSet table4_hat, table4_tilde, table5_hat, table5_tilde;
// G, G-hat, G-tilde, G^3, G-hat^3, G-tilde^3 on |Psi_2>
extern const std::array<std::array<double, 2>, 6> table2;
}  // namespace published

}  // namespace qce
