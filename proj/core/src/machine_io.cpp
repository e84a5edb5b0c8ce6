#include "qce/machine_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qce {

using nlohmann::json;

namespace {

json term_to_json(const Term& t)
{
    json j = {{"kind", term_kind_name(t.kind)}, {"j", t.j}, {"strength", t.strength}};
    if (t.two_site())
        j["k"] = t.k;
    if (t.time_dependent()) {
        if (t.kind == TermKind::sinusoidal)
            j["axis"] = std::string(1, axis_letter(t.axis));
        j["frequency"] = t.frequency;
        j["phase"] = t.phase;
    }
    if (!t.group.empty())
        j["group"] = t.group;
    return j;
}

Term term_from_json(const json& j)
{
    Term t;
    t.kind = term_kind_from_name(j.at("kind").get<std::string>());
    t.j = j.at("j").get<int>();
    t.strength = j.at("strength").get<double>();
    if (t.two_site())
        t.k = j.at("k").get<int>();
    if (t.time_dependent()) {
        if (t.kind == TermKind::sinusoidal) {
            const auto a = j.value("axis", std::string("y"));
            if (a.size() != 1)
                throw std::invalid_argument("bad drive axis '" + a + "'");
            t.axis = axis_from_letter(a[0]);
        }
        t.frequency = j.value("frequency", 0.0);
        t.phase = j.value("phase", 0.0);
    }
    t.group = j.value("group", std::string());
    return t;
}

}  // namespace

std::string machine_to_text(const MachineModel& m)
{
    json j;
    j["name"] = m.name;
    j["n_qubits"] = m.n_qubits;
    j["frame"] = {{"kind", m.frame == Frame::laboratory ? "laboratory" : "rotating"},
                  {"omega", m.omega_frame}};
    j["pairs"] = m.pairs;
    j["constants"] = m.constants;
    j["notes"] = m.notes;
    j["terms"] = json::array();
    for (const auto& t : m.terms)
        j["terms"].push_back(term_to_json(t));
    return j.dump(2) + "\n";
}

MachineModel machine_from_text(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("machine file: ") + e.what());
    }
    MachineModel m;
    try {
        m.name = j.value("name", std::string("unnamed"));
        m.n_qubits = j.at("n_qubits").get<int>();
        if (j.contains("frame")) {
            const auto kind = j["frame"].value("kind", std::string("laboratory"));
            if (kind == "laboratory")
                m.frame = Frame::laboratory;
            else if (kind == "rotating")
                m.frame = Frame::rotating;
            else
                throw std::invalid_argument("unknown frame '" + kind + "'");
            m.omega_frame = j["frame"].value("omega", 0.0);
        }
        if (j.contains("pairs"))
            m.pairs = j["pairs"].get<std::vector<std::array<int, 2>>>();
        if (j.contains("constants"))
            m.constants = j["constants"].get<std::map<std::string, double>>();
        if (j.contains("notes"))
            m.notes = j["notes"].get<std::map<std::string, std::string>>();
        for (const auto& t : j.at("terms"))
            m.terms.push_back(term_from_json(t));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("machine file: ") + e.what());
    }
    m.validate();
    return m;
}

MachineModel load_machine(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open machine file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return machine_from_text(ss.str());
}

void save_machine(const MachineModel& m, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write machine file " + path.string());
    out << machine_to_text(m);
}

MachineModel resolve_machine(std::string_view spec)
{
    for (const auto& n : preset_names())
        if (n == spec)
            return preset(spec);
    std::filesystem::path p{std::string(spec)};
    if (std::filesystem::exists(p))
        return load_machine(p);
    throw std::invalid_argument("'" + std::string(spec) + "' is neither a machine preset nor a readable file");
}

}  // namespace qce
