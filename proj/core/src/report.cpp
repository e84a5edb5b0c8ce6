#include "qce/report.hpp"

#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qce {

namespace {

std::string qlist(const std::vector<double>& v, const char* fmtstr)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += fmt::format(fmt::runtime(fmtstr), v[i]);
    }
    return s;
}

std::string pair_text(const std::vector<double>& v)
{
    if (v.empty())
        return std::string(15, ' ');
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + fmt::format("{:.3f}", v[i]);
    return s + ")";
}

}  // namespace

std::string table_csv(const TableReport& t)
{
    std::string out = "run_id,mode,n";
    for (int q : t.qubits)
        out += fmt::format(",Q_{}", q);
    for (int q : t.qubits)
        out += fmt::format(",published_Q_{}", q);
    out += "\n";
    for (const auto& r : t.rows) {
        out += fmt::format("{},{},{},{}", r.run_id, mode_name(r.mode), r.n, qlist(r.q, "{:.6f}"));
        if (r.published_q.empty())
            out += std::string(t.qubits.size(), ',');
        else
            out += "," + qlist(r.published_q, "{:.3f}");
        out += "\n";
    }
    return out;
}

std::string table_text(const TableReport& t)
{
    std::string out = fmt::format("Table {}: {}\n", t.id, t.title);
    std::string qs;
    for (int q : t.qubits)
        qs += (qs.empty() ? "Q_" : ",Q_") + std::to_string(q);
    out += fmt::format("{:<36} {:>2}  {:<15} {:<15} {:>7}  {}\n", "run", "n", "(" + qs + ")", "published", "|dev|",
                       "argmax");
    for (const auto& r : t.rows) {
        const double dev = r.published_deviation();
        out += fmt::format("{:<36} {:>2}  {:<15} {:<15} {:>7}  {}\n", r.run_id, r.n, pair_text(r.q),
                           pair_text(r.published_q), dev < 0 ? std::string("-") : fmt::format("{:.3f}", dev),
                           r.argmax_ok() ? "ok" : fmt::format("WRONG ({})", r.argmax));
    }
    return out;
}

std::string scatter_csv(const ScatterResult& s)
{
    std::string out = "x,y,good\n";
    for (const auto& p : s.points)
        out += fmt::format("{:.6f},{:.6f},{}\n", p.x, p.y, p.good ? 1 : 0);
    return out;
}

std::string scatter_summary(const ScatterResult& s)
{
    const double frac = s.points.empty() ? 0.0 : double(s.good) / double(s.points.size());
    return fmt::format("samples {}  mode {}  reference n = {}  c = {}\n"
                       "good {} ({:.2f}%)  bad {}\n"
                       "exact-input y {:.6f}\n"
                       "max y with x^2 > 0.9: {:.6f}  (bound {:.6f})\n",
                       s.points.size(), mode_name(s.mode), s.n, s.confidence, s.good, 100 * frac,
                       s.points.size() - s.good, s.exact_input_y, s.max_y_high_x, s.high_x_bound);
}

std::string trajectory_csv(const DissipationResult& d)
{
    std::string out = "t";
    const std::size_t n = d.final_q.size();
    for (std::size_t j = 1; j <= n; ++j)
        out += fmt::format(",Q_{}", j);
    out += "\n";
    for (std::size_t i = 0; i < d.t.size(); ++i)
        out += fmt::format("{:.6f},{}\n", d.t[i], qlist(d.q[i], "{:.9f}"));
    return out;
}

std::string dissipation_summary(const DissipationResult& d)
{
    return fmt::format("lambda {:g}\nfinal Q  {}\npure-state Q  {}\n", d.lambda, qlist(d.final_q, "{:.6f}"),
                       qlist(d.pure_q, "{:.6f}"));
}

std::string grover4_csv(const Grover4Report& g)
{
    std::string out = "run_id,mode,n,Q_1,Q_2,Q_3,Q_4,published_Q_3,published_Q_4\n";
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        const auto& r = g.rows[i];
        out += fmt::format("{},{},{},{:.6f},{:.6f},{}", r.run_id, mode_name(r.mode), r.n, g.database[i][0],
                           g.database[i][1], qlist(r.q, "{:.6f}"));
        out += r.published_q.empty() ? ",," : "," + qlist(r.published_q, "{:.3f}");
        out += "\n";
    }
    return out;
}

std::string grover4_text(const Grover4Report& g)
{
    std::string out = fmt::format("4-qubit Grover, {} copy, {} pulses\n", g.copy == CopyKind::xy ? "xy" : "cnot",
                                  g.pulses);
    out += fmt::format("{:<34} {:>2}  {:<15} {:<15} {:<15} {}\n", "run", "n", "(Q_1,Q_2)", "(Q_3,Q_4)", "published",
                       "argmax");
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        const auto& r = g.rows[i];
        out += fmt::format("{:<34} {:>2}  {:<15} {:<15} {:<15} {}\n", r.run_id, r.n,
                           pair_text({g.database[i][0], g.database[i][1]}), pair_text(r.q), pair_text(r.published_q),
                           r.argmax_ok() ? "ok" : "WRONG");
    }
    return out;
}

std::string oracle_csv(const OracleReport& o)
{
    std::string out = "omega,hg,t,q_analytic,q_numeric\n";
    for (const auto& p : o.points)
        out += fmt::format("{:.9f},{:.9f},{:.9f},{:.12f},{:.12f}\n", p.omega, p.hg, p.t, p.analytic, p.numeric);
    return out;
}

std::string oracle_summary(const OracleReport& o)
{
    return fmt::format("points {}  max |analytic - numeric| {:.3e}\n", o.points.size(), o.max_error);
}

std::string q_line(const MeasurementRecord& r)
{
    std::string out;
    for (std::size_t j = 0; j < r.q.size(); ++j)
        out += fmt::format("{}Q_{} = {:.6f}", j ? "  " : "", j + 1, r.q[j]);
    return out + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("error writing " + path.string());
}

}  // namespace qce
