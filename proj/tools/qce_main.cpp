#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qce/qce.hpp"

namespace fs = std::filesystem;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::string out;
    double step = 0.0;
    std::string mode;
    std::string pulse_table;
};

std::optional<qce::Mode> mode_of(const Globals& g)
{
    if (g.mode.empty())
        return std::nullopt;
    return qce::mode_from_name(g.mode);
}

// --out FILE, else $QCE_OUT_DIR/default_name, else stdout. Returns true when
// the CSV went to stdout, so the caller can move its report to stderr.
bool emit_csv(const Globals& g, const std::string& default_name, const std::string& csv)
{
    fs::path dest;
    if (!g.out.empty() && g.out != "-")
        dest = g.out;
    else if (const char* dir = std::getenv("QCE_OUT_DIR"); dir && *dir && g.out != "-")
        dest = fs::path(dir) / default_name;
    if (dest.empty()) {
        std::cout << csv;
        return true;
    }
    qce::write_file(dest, csv);
    std::cerr << "wrote " << dest.string() << "\n";
    return false;
}

void report(bool csv_on_stdout, const std::string& text) { (csv_on_stdout ? std::cerr : std::cout) << text; }

qce::ExperimentConfig config(const Globals& g)
{
    qce::ExperimentConfig c;
    c.seed = g.seed;
    c.plan.step = g.step;
    c.mode = mode_of(g);
    if (!g.pulse_table.empty())
        c.pulse_table = qce::resolve_pulse_table(g.pulse_table);
    return c;
}

qce::QuantumProgram load_program_arg(const std::string& arg)
{
    if (fs::exists(arg))
        return qce::load_program(arg);
    return qce::sequence_library(arg);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qce: quantum computer emulator for spin-1/2 NMR-style machines"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--out", g.out, "CSV output file ('-' for stdout); default $QCE_OUT_DIR/<name>.csv or stdout");
    app.add_option("--step", g.step, "time step for driven pulses (0 = automatic)")->check(CLI::NonNegativeNumber);
    app.add_option("--mode", g.mode, "ideal or physical")->check(CLI::IsMember({"ideal", "physical"}));
    app.add_option("--pulse-table", g.pulse_table, "builtin pulse table name or JSON file");

    // run
    auto* run = app.add_subcommand("run", "execute a program file or library sequence on |0...0>");
    std::string program_arg, machine_arg = "chloroform2";
    double lambda = -1.0, beta = 100.0;
    int samples = 10;
    run->add_option("program", program_arg, "program file (.qp) or library sequence name")->required();
    run->add_option("--machine", machine_arg, "machine preset or JSON file");
    run->add_option("--lambda", lambda, "bath coupling; runs the master equation and emits a trajectory");
    run->add_option("--beta", beta, "bath inverse temperature");
    run->add_option("--samples", samples, "trajectory points per pulse (master equation)");

    // table
    auto* table = app.add_subcommand("table", "reproduce one of the result tables");
    int table_id = 1;
    table->add_option("id", table_id, "table number 1..5")->required()->check(CLI::Range(1, 5));

    // scatter
    auto* scatter = app.add_subcommand("scatter", "query stability scatter (x, y, good)");
    int n_samples = 20000, ref = 0;
    double confidence = 0.7;
    scatter->add_option("--samples", n_samples, "number of random inputs")->check(CLI::NonNegativeNumber);
    scatter->add_option("--n", ref, "reference needle position")->check(CLI::Range(0, 3));
    scatter->add_option("--confidence", confidence, "confidence level c");

    // dissipation
    auto* diss = app.add_subcommand("dissipation", "U_2|u'> under the master equation");
    qce::DissipationConfig dc;
    diss->add_option("--lambda", dc.lambda, "bath coupling strength");
    diss->add_option("--beta", dc.beta, "inverse temperature");
    diss->add_option("--I0", dc.I0, "spectral density prefactor");
    diss->add_option("--samples", dc.samples, "trajectory points per pulse");

    // grover4
    auto* g4 = app.add_subcommand("grover4", "4-qubit Grover with a copied database");
    std::string copy = "xy", pulses = "rotating";
    g4->add_option("--copy", copy, "xy or cnot")->check(CLI::IsMember({"xy", "cnot"}));
    g4->add_option("--pulses", pulses, "resonant-optimized, rotating, or a pulse-table file");

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check", "closed-form hard-pulse response vs numeric propagation");
    int points = 1000;
    double tol = 1e-9;
    oracle->add_option("--points", points, "sweep size")->check(CLI::PositiveNumber);
    oracle->add_option("--tol", tol, "fail when the max deviation exceeds this");

    auto* list = app.add_subcommand("list", "list presets, pulse tables and library sequences");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const qce::MachineModel m = qce::resolve_machine(machine_arg);
            const qce::QuantumProgram p = load_program_arg(program_arg);
            const qce::Mode mode = mode_of(g).value_or(lambda >= 0 ? qce::Mode::physical : qce::Mode::ideal);
            std::optional<qce::PulseTable> t;
            if (mode == qce::Mode::physical)
                t = qce::resolve_pulse_table(!g.pulse_table.empty() ? g.pulse_table
                                             : m.name == "cytosine2"  ? std::string("hard")
                                                                      : std::string("resonant-optimized"));
            qce::PropagationPlan plan;
            plan.step = g.step;
            qce::Executor ex(m, t, plan);
            if (lambda >= 0) {
                if (mode != qce::Mode::physical)
                    throw std::invalid_argument("the master equation runs in physical mode only");
                qce::BathSpec bath;
                bath.lambda = lambda;
                bath.beta = beta;
                bath.C = qce::default_bath_coupling(m.n_qubits);
                qce::DissipationResult d;
                d.lambda = lambda;
                const auto rho = ex.run_master(
                    p, qce::DensityMatrix::pure(qce::StateVector(m.n_qubits)), bath,
                    [&](double tt, const qce::MeasurementRecord& r) {
                        d.t.push_back(tt);
                        d.q.push_back(r.q);
                    },
                    samples);
                d.final_q = qce::measure(rho).q;
                const bool so = emit_csv(g, p.name + "-trajectory.csv", qce::trajectory_csv(d));
                report(so, qce::q_line(qce::measure(rho)));
            } else {
                const auto out = ex.run(p, qce::StateVector(m.n_qubits), mode);
                const auto r = qce::measure(out);
                std::cout << p.name << " on " << m.name << " (" << qce::mode_name(mode) << ")\n" << qce::q_line(r);
                if (!g.out.empty()) {
                    std::string csv;
                    for (std::size_t j = 1; j <= r.q.size(); ++j)
                        csv += (j > 1 ? ",Q_" : "Q_") + std::to_string(j);
                    csv += "\n";
                    for (std::size_t j = 0; j < r.q.size(); ++j)
                        csv += (j ? "," : "") + fmt::format("{:.9f}", r.q[j]);
                    emit_csv(g, "", csv + "\n");
                }
            }
        } else if (*table) {
            const auto rep = qce::run_table(table_id, config(g));
            const bool so = emit_csv(g, "table" + std::to_string(table_id) + ".csv", qce::table_csv(rep));
            report(so, qce::table_text(rep));
        } else if (*scatter) {
            auto c = config(g);
            c.samples = n_samples;
            c.confidence = confidence;
            const auto res = qce::run_stability_scatter(c, ref);
            const bool so = emit_csv(g, "scatter.csv", qce::scatter_csv(res));
            report(so, qce::scatter_summary(res));
        } else if (*diss) {
            if (g.step > 0)
                dc.plan.step = g.step;
            if (!g.pulse_table.empty())
                dc.pulse_table = qce::resolve_pulse_table(g.pulse_table);
            const auto res = qce::run_dissipation(dc);
            const bool so = emit_csv(g, "dissipation.csv", qce::trajectory_csv(res));
            report(so, qce::dissipation_summary(res));
        } else if (*g4) {
            auto c = config(g);
            const auto rep = qce::run_grover4(copy == "xy" ? qce::CopyKind::xy : qce::CopyKind::cnot, pulses, c);
            const bool so = emit_csv(g, "grover4-" + copy + ".csv", qce::grover4_csv(rep));
            report(so, qce::grover4_text(rep));
        } else if (*oracle) {
            const auto rep = qce::run_oracle_check(g.seed, points);
            const bool so = emit_csv(g, "oracle.csv", qce::oracle_csv(rep));
            report(so, qce::oracle_summary(rep));
            if (rep.max_error > tol) {
                std::cerr << "oracle check FAILED: deviation above " << tol << "\n";
                return 1;
            }
        } else if (*list) {
            std::cout << "machines:";
            for (const auto& n : qce::preset_names())
                std::cout << " " << n;
            std::cout << "\npulse tables:";
            for (const auto& n : qce::builtin_pulse_table_names())
                std::cout << " " << n;
            std::cout << "\nsequences:";
            for (const auto& n : qce::sequence_names())
                std::cout << " " << n;
            std::cout << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
