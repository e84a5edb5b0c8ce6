#include "qce/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qce/library.hpp"

namespace qce {

namespace published {
const QSet table1_hat{{{0.028, 0.163}, {0.966, 0.171}, {0.037, 0.836}, {0.995, 0.830}}};
const QSet table1_tilde{{{0.955, 0.031}, {0.041, 0.026}, {0.971, 0.971}, {0.027, 0.972}}};
const QSet table1_hat_opt{{{0.027, 0.152}, {0.972, 0.180}, {0.037, 0.847}, {0.964, 0.820}}};
const QSet table1_tilde_opt{{{0.030, 0.022}, {0.969, 0.035}, {0.034, 0.977}, {0.965, 0.965}}};
const QSet table3_hat{{{0.000, 0.000}, {0.999, 0.005}, {0.001, 0.999}, {0.999, 0.996}}};
const QSet table3_tilde{{{0.001, 0.001}, {0.999, 0.002}, {0.002, 0.999}, {0.999, 0.998}}};
const QSet table4_hat{{{0.172, 0.135}, {0.809, 0.187}, {0.190, 0.865}, {0.831, 0.814}}};
const QSet table4_tilde{{{0.412, 0.113}, {0.565, 0.218}, {0.433, 0.888}, {0.591, 0.783}}};
const QSet table5_hat{{{0.195, 0.195}, {0.806, 0.194}, {0.193, 0.805}, {0.806, 0.806}}};
const QSet table5_tilde{{{0.265, 0.197}, {0.737, 0.193}, {0.262, 0.804}, {0.737, 0.807}}};
const std::array<std::array<double, 2>, 6> table2{
    {{0.257, 0.944}, {0.154, 0.944}, {0.487, 0.988}, {0.908, 0.938}, {0.766, 0.857}, {0.578, 0.995}}};
}  // namespace published

double QRow::published_deviation() const
{
    if (published_q.empty())
        return -1.0;
    double d = 0.0;
    for (std::size_t i = 0; i < q.size() && i < published_q.size(); ++i)
        d = std::max(d, std::abs(q[i] - published_q[i]));
    return d;
}

std::vector<const QRow*> TableReport::select(std::string_view run_id) const
{
    std::vector<const QRow*> out;
    for (const auto& r : rows)
        if (r.run_id == run_id)
            out.push_back(&r);
    return out;
}

namespace {

std::vector<double> needle_q(int n) { return {double(n & 1), double((n >> 1) & 1)}; }

std::vector<double> as_vec(const std::array<double, 2>& a) { return {a[0], a[1]}; }

QRow make_row(std::string run_id, Mode mode, int n, const StateVector& s, const std::vector<int>& qubits,
              std::vector<double> ref, std::size_t expected)
{
    const MeasurementRecord r = measure(s);
    QRow row;
    row.run_id = std::move(run_id);
    row.mode = mode;
    row.n = n;
    for (int q : qubits)
        row.q.push_back(r.q[static_cast<std::size_t>(q - 1)]);
    std::vector<double> marginal(std::size_t(1) << qubits.size(), 0.0);
    for (std::size_t b = 0; b < r.probabilities.size(); ++b) {
        std::size_t pat = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i)
            if (qubit_bit(b, qubits[i]))
                pat |= std::size_t(1) << i;
        marginal[pat] += r.probabilities[b];
    }
    row.argmax = static_cast<std::size_t>(std::max_element(marginal.begin(), marginal.end()) - marginal.begin());
    row.expected = expected;
    row.published_q = std::move(ref);
    return row;
}

bool wants(const ExperimentConfig& cfg, Mode m) { return !cfg.mode || *cfg.mode == m; }

struct Calibration {
    std::string tag;
    PulseTable table;
    const published::QSet* hat = nullptr;
    const published::QSet* tilde = nullptr;
};

QuantumProgram with_prep(const QuantumProgram& prep, const QuantumProgram& body)
{
    QuantumProgram p;
    p.name = prep.name + "+" + body.name;
    p.then(prep).then(body);
    return p;
}

void needle_rows(TableReport& rep, const std::string& prefix, Executor& ex, Mode mode, const published::QSet* hat,
                 const published::QSet* tilde)
{
    const StateVector zero(ex.machine().n_qubits);
    for (int which = 0; which < 2; ++which) {
        const QuantumProgram prep = which == 0 ? prepare_u() : prepare_u_alt();
        const published::QSet* ref = which == 0 ? hat : tilde;
        for (int n = 0; n < 4; ++n) {
            const StateVector out = ex.run(with_prep(prep, grover_optimized(n)), zero, mode);
            std::vector<double> pv = mode == Mode::ideal ? needle_q(n) : ref ? as_vec((*ref)[n]) : std::vector<double>{};
            rep.rows.push_back(make_row(prefix + (which == 0 ? "-hat-" : "-tilde-") +
                                            (mode == Mode::ideal ? std::string("ideal") : ex.table()->name),
                                        mode, n, out, rep.qubits, std::move(pv), static_cast<std::size_t>(n)));
        }
    }
}

const published::QSet* lookup(const std::string& name, const std::map<std::string, const published::QSet*>& m)
{
    auto it = m.find(name);
    return it == m.end() ? nullptr : it->second;
}

TableReport table_two_qubit(int id, const ExperimentConfig& cfg)
{
    TableReport rep;
    rep.id = id;
    rep.qubits = {1, 2};
    const bool hard = id == 3;
    const MachineModel m = hard ? cytosine2() : chloroform2();
    rep.title = hard ? "Grover U_n on cytosine2 with hard non-selective pulses"
                     : "Grover U_n on chloroform2 with resonant pulses";
    if (wants(cfg, Mode::ideal)) {
        Executor ex(m, std::nullopt, cfg.plan);
        needle_rows(rep, "t" + std::to_string(id), ex, Mode::ideal, nullptr, nullptr);
    }
    if (!wants(cfg, Mode::physical))
        return rep;
    std::vector<Calibration> cals;
    if (cfg.pulse_table) {
        cals.push_back({cfg.pulse_table->name, *cfg.pulse_table});
    } else if (hard) {
        cals.push_back({"hard", builtin_pulse_table("hard")});
    } else {
        cals.push_back({"resonant-plain", builtin_pulse_table("resonant-plain")});
        cals.push_back({"resonant-optimized", builtin_pulse_table("resonant-optimized")});
    }
    for (auto& c : cals) {
        if (hard && c.table.name == "hard") {
            c.hat = &published::table3_hat;
            c.tilde = &published::table3_tilde;
        } else if (!hard) {
            c.hat = lookup(c.table.name, {{"resonant-plain", &published::table1_hat},
                                          {"resonant-optimized", &published::table1_hat_opt}});
            c.tilde = lookup(c.table.name, {{"resonant-plain", &published::table1_tilde},
                                            {"resonant-optimized", &published::table1_tilde_opt}});
        }
        Executor ex(m, c.table, cfg.plan);
        needle_rows(rep, "t" + std::to_string(id), ex, Mode::physical, c.hat, c.tilde);
    }
    return rep;
}

TableReport table_two(const ExperimentConfig& cfg)
{
    TableReport rep;
    rep.id = 2;
    rep.qubits = {1, 2};
    rep.title = "Query variants on the exact input |Psi_2> (chloroform2, resonant pulses)";
    const MachineModel m = chloroform2();
    const StateVector psi2 = marked_state(2, 2);
    const std::array<QuantumProgram, 3> base{grover_query(), grover_query_hat(), grover_query_tilde()};
    std::vector<QuantumProgram> progs(base.begin(), base.end());
    for (const auto& b : base)
        progs.push_back(b.repeated(3));
    auto rows = [&](Executor& ex, Mode mode) {
        for (std::size_t i = 0; i < progs.size(); ++i) {
            const std::string tag = mode == Mode::ideal ? "ideal" : ex.table()->name;
            std::vector<double> pv;
            if (mode == Mode::ideal)
                pv = needle_q(2);
            else if (ex.table()->name == "resonant-optimized")
                pv = as_vec(published::table2[i]);
            rep.rows.push_back(make_row("t2-" + progs[i].name + "-" + tag, mode, 2, ex.run(progs[i], psi2, mode),
                                        rep.qubits, std::move(pv), 2));
        }
    };
    if (wants(cfg, Mode::ideal)) {
        Executor ex(m, std::nullopt, cfg.plan);
        rows(ex, Mode::ideal);
    }
    if (wants(cfg, Mode::physical)) {
        Executor ex(m, cfg.pulse_table ? *cfg.pulse_table : builtin_pulse_table("resonant-optimized"), cfg.plan);
        rows(ex, Mode::physical);
    }
    return rep;
}

const published::QSet* grover4_published(CopyKind copy, const std::string& pulses)
{
    if (pulses == "resonant-optimized")
        return copy == CopyKind::xy ? &published::table4_hat : &published::table4_tilde;
    if (pulses == "rotating")
        return copy == CopyKind::xy ? &published::table5_hat : &published::table5_tilde;
    return nullptr;
}

TableReport table_four_qubit(int id, const ExperimentConfig& cfg)
{
    TableReport rep;
    rep.id = id;
    rep.qubits = {3, 4};
    const std::string pulses = id == 4 ? "resonant-optimized" : "rotating";
    rep.title = id == 4 ? "4-qubit Grover with resonant pulses (xy copy, cnot copy)"
                        : "4-qubit Grover with rotating-field pulses (xy copy, cnot copy)";
    for (CopyKind copy : {CopyKind::xy, CopyKind::cnot}) {
        const Grover4Report g = run_grover4(copy, pulses, cfg);
        for (QRow r : g.rows) {
            r.run_id = "t" + std::to_string(id) + "-" + r.run_id.substr(std::string("grover4-").size());
            rep.rows.push_back(std::move(r));
        }
    }
    return rep;
}

}  // namespace

TableReport run_table(int id, const ExperimentConfig& cfg)
{
    switch (id) {
    case 1:
    case 3:
        return table_two_qubit(id, cfg);
    case 2:
        return table_two(cfg);
    case 4:
    case 5:
        return table_four_qubit(id, cfg);
    default:
        throw std::invalid_argument("unknown table " + std::to_string(id) + " (expected 1..5)");
    }
}

Grover4Report run_grover4(CopyKind copy, const std::string& pulses, const ExperimentConfig& cfg)
{
    Grover4Report rep;
    rep.copy = copy;
    const MachineModel m = twin_ising4(copy);
    const std::vector<int> qubits{3, 4};
    const std::string copy_name = copy == CopyKind::xy ? "xy" : "cnot";
    const StateVector zero(4);
    auto rows = [&](Executor& ex, Mode mode, const published::QSet* ref, const std::string& tag) {
        for (int n = 0; n < 4; ++n) {
            const StateVector out = ex.run(grover4(copy, n), zero, mode);
            std::vector<double> pv = mode == Mode::ideal ? needle_q(n) : ref ? as_vec((*ref)[n]) : std::vector<double>{};
            rep.rows.push_back(make_row("grover4-" + copy_name + "-" + tag, mode, n, out, qubits, std::move(pv),
                                        static_cast<std::size_t>(n)));
            const auto q = measure(out).q;
            rep.database.push_back({q[0], q[1]});
        }
    };
    const PulseTable table = cfg.pulse_table ? *cfg.pulse_table : resolve_pulse_table(pulses);
    rep.pulses = table.name;
    if (wants(cfg, Mode::ideal)) {
        Executor ex(m, std::nullopt, cfg.plan);
        rows(ex, Mode::ideal, nullptr, "ideal");
    }
    if (wants(cfg, Mode::physical)) {
        Executor ex(m, table, cfg.plan);
        rows(ex, Mode::physical, grover4_published(copy, table.name), table.name);
    }
    return rep;
}

StabilitySample input_from_coefficients(double alpha0, const std::array<cplx, 3>& alpha, int n)
{
    if (n < 0 || n > 3)
        throw std::invalid_argument("reference needle must be 0..3");
    StabilitySample s;
    s.alpha0 = alpha0;
    s.alpha = alpha;
    const StateVector ref = marked_state(2, static_cast<std::size_t>(n));
    CVector v = alpha0 * ref.amplitudes();
    int i = 0;
    for (int m = 0; m < 4; ++m)
        if (m != n)
            v += alpha[static_cast<std::size_t>(i++)] * marked_state(2, static_cast<std::size_t>(m)).amplitudes();
    s.psi = StateVector(std::move(v));
    s.x = inner(s.psi, ref).real();
    return s;
}

StabilitySample sample_random_input(std::uint64_t seed, std::uint64_t index, int n)
{
    std::mt19937_64 rng(seed + index);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> g(0.0, 1.0);
    const double a0 = u(rng);
    std::array<double, 6> w{};
    double norm = 0.0;
    while (norm == 0.0) {
        norm = 0.0;
        for (auto& x : w) {
            x = g(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
    }
    const double r = std::sqrt(std::max(0.0, 1.0 - a0 * a0)) / norm;
    std::array<cplx, 3> a{};
    for (std::size_t i = 0; i < 3; ++i)
        a[i] = cplx(w[2 * i] * r, w[2 * i + 1] * r);
    return input_from_coefficients(a0, a, n);
}

double stability_bound(double y0, double a)
{
    const double ty = std::acos(std::clamp(y0, 0.0, 1.0));
    const double ta = std::acos(std::clamp(a, 0.0, 1.0));
    return ty <= ta ? 1.0 : std::cos(ty - ta);
}

ScatterResult run_stability_scatter(const ExperimentConfig& cfg, int n)
{
    if (cfg.samples < 0)
        throw std::invalid_argument("sample count must be >= 0");
    ScatterResult res;
    res.n = n;
    res.mode = cfg.mode.value_or(Mode::physical);
    res.confidence = cfg.confidence;
    std::optional<PulseTable> table;
    if (res.mode == Mode::physical)
        table = cfg.pulse_table ? *cfg.pulse_table : builtin_pulse_table("resonant-optimized");
    Executor ex(chloroform2(), table, cfg.plan);
    const CMatrix G = ex.unitary(grover_query(), res.mode).matrix();
    const auto target = static_cast<Eigen::Index>(n);
    res.exact_input_y = std::abs((G * marked_state(2, static_cast<std::size_t>(n)).amplitudes())(target));
    res.high_x_bound = stability_bound(res.exact_input_y, std::sqrt(0.9));
    res.points.reserve(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) {
        const StabilitySample s = sample_random_input(cfg.seed, static_cast<std::uint64_t>(i), n);
        ScatterPoint p;
        p.x = s.x;
        p.y = std::abs((G * s.psi.amplitudes())(target));
        p.good = p.x * p.x >= cfg.confidence && p.y * p.y >= cfg.confidence;
        res.good += p.good ? 1 : 0;
        if (p.x * p.x > 0.9)
            res.max_y_high_x = std::max(res.max_y_high_x, p.y);
        res.points.push_back(p);
    }
    return res;
}

DissipationResult run_dissipation(const DissipationConfig& cfg)
{
    const MachineModel m = chloroform2();
    Executor ex(m, cfg.pulse_table ? *cfg.pulse_table : builtin_pulse_table("resonant-optimized"), cfg.plan);
    const QuantumProgram prog = with_prep(prepare_u_alt(), grover_optimized(2));
    BathSpec bath;
    bath.lambda = cfg.lambda;
    bath.beta = cfg.beta;
    bath.I0 = cfg.I0;
    bath.C = default_bath_coupling(m.n_qubits);
    DissipationResult res;
    res.lambda = cfg.lambda;
    const StateVector zero(m.n_qubits);
    const DensityMatrix out = ex.run_master(
        prog, DensityMatrix::pure(zero), bath,
        [&](double t, const MeasurementRecord& r) {
            res.t.push_back(t);
            res.q.push_back(r.q);
        },
        cfg.samples);
    res.final_q = measure(out).q;
    res.pure_q = measure(ex.run(prog, zero, Mode::physical)).q;
    return res;
}

OracleReport run_oracle_check(std::uint64_t seed, int points)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> om(0.0, 4.0), hg(0.01, 40.0), frac(0.0, 1.0);
    const CMatrix sz = spin_matrix(1, Axis::z, 1), sx = spin_matrix(1, Axis::x, 1);
    OracleReport rep;
    for (int i = 0; i < points; ++i) {
        OraclePoint p;
        p.omega = om(rng);
        p.hg = hg(rng);
        const double lam = std::sqrt(p.omega * p.omega / 4 + p.hg * p.hg);
        p.t = frac(rng) * 4 * std::numbers::pi / lam;
        p.analytic = analytic_hard_pulse(p.omega, p.hg, 1.0, p.t);
        const CMatrix h = -(p.omega / 2) * sz - p.hg * sx;
        const CVector v = propagator_static(h, p.t).col(0);
        p.numeric = std::norm(v(1));
        rep.max_error = std::max(rep.max_error, std::abs(p.analytic - p.numeric));
        rep.points.push_back(p);
    }
    return rep;
}

}  // namespace qce
