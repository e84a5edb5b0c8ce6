#include "qce/pulse_table.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qce/program_text.hpp"

namespace qce {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

double number(const json& j, const char* what)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        try {
            return parse_angle(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("pulse table ") + what + ": " + e.what());
        }
    }
    throw std::invalid_argument(std::string("pulse table ") + what + ": expected a number or an expression like \"40pi\"");
}

}  // namespace

std::string pulse_style_name(PulseStyle s)
{
    switch (s) {
    case PulseStyle::resonant:
        return "resonant";
    case PulseStyle::rotating:
        return "rotating";
    case PulseStyle::hard:
        return "hard";
    }
    return "?";
}

PulseStyle pulse_style_from_name(std::string_view s)
{
    if (s == "resonant")
        return PulseStyle::resonant;
    if (s == "rotating")
        return PulseStyle::rotating;
    if (s == "hard")
        return PulseStyle::hard;
    throw std::invalid_argument("unknown pulse style '" + std::string(s) + "'");
}

void PulseTable::validate() const
{
    if (grid < 0.0 || max_windings < 0)
        throw std::invalid_argument("pulse table '" + name + "': grid and max_windings must be >= 0");
    if (style == PulseStyle::hard) {
        if (!(hard_field > 0.0))
            throw std::invalid_argument("pulse table '" + name + "': hard field must be > 0");
        return;
    }
    for (const auto& [local, e] : targets) {
        if (local != 1 && local != 2)
            throw std::invalid_argument("pulse table '" + name + "': targets are 1 or 2 within a pair");
        if (!(e.duration > 0.0))
            throw std::invalid_argument("pulse table '" + name + "': durations must be > 0");
        if (style == PulseStyle::resonant && e.amplitudes.size() != 2)
            throw std::invalid_argument("pulse table '" + name + "': resonant entries need two amplitudes");
    }
    if (style == PulseStyle::resonant && drive_axis == Axis::z)
        throw std::invalid_argument("pulse table '" + name + "': drive axis must be x or y");
}

const TargetEntry& PulseTable::target(int local) const
{
    auto it = targets.find(local);
    if (it == targets.end())
        throw std::invalid_argument("pulse table '" + name + "' has no entry for pair-local target " +
                                    std::to_string(local));
    return it->second;
}

PulseTable builtin_pulse_table(std::string_view name)
{
    PulseTable t;
    t.name = std::string(name);
    if (name == "resonant-optimized" || name == "resonant-plain") {
        t.style = PulseStyle::resonant;
        t.drive_axis = Axis::y;
        t.phase_x = kPi / 2;
        t.phase_y = 0.0;
        if (name == "resonant-optimized")
            t.targets[1] = {{0.025, 0.00625}, 40 * kPi, std::nullopt};
        else
            t.targets[1] = {{0.05, 0.0125}, 20 * kPi, std::nullopt};
        t.targets[2] = {{0.05, 0.0125}, 80 * kPi, std::nullopt};
    } else if (name == "rotating") {
        t.style = PulseStyle::rotating;
        t.phase_x = 0.0;
        t.phase_y = kPi / 2;
        t.targets[1] = {{}, 40 * kPi, std::nullopt};
        t.targets[2] = {{}, 80 * kPi, std::nullopt};
    } else if (name == "hard") {
        t.style = PulseStyle::hard;
        t.hard_field = 200.0;
        t.max_windings = 2;
    } else {
        throw std::invalid_argument("unknown pulse table '" + std::string(name) + "'");
    }
    return t;
}

std::vector<std::string> builtin_pulse_table_names() { return {"resonant-optimized", "resonant-plain", "rotating", "hard"}; }

std::string pulse_table_to_text(const PulseTable& t)
{
    json j;
    j["name"] = t.name;
    j["style"] = pulse_style_name(t.style);
    if (t.style == PulseStyle::hard) {
        j["hard"] = {{"field", t.hard_field},
                     {"couplings_during_pulses", t.couplings_during_pulses},
                     {"couplings_during_free", t.couplings_during_free}};
    } else {
        json targets = json::object();
        for (const auto& [local, e] : t.targets) {
            json o = {{"duration", e.duration}};
            if (!e.amplitudes.empty())
                o["amplitudes"] = e.amplitudes;
            if (e.frequency)
                o["frequency"] = *e.frequency;
            targets[std::to_string(local)] = o;
        }
        j["targets"] = targets;
        j["phase_x"] = t.phase_x;
        j["phase_y"] = t.phase_y;
        if (t.style == PulseStyle::resonant)
            j["drive_axis"] = std::string(1, axis_letter(t.drive_axis));
    }
    j["interaction"] = {{"grid", t.grid}, {"max_windings", t.max_windings}};
    return j.dump(2) + "\n";
}

PulseTable pulse_table_from_text(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("pulse table: ") + e.what());
    }
    PulseTable t;
    try {
        t.name = j.value("name", std::string("custom"));
        t.style = pulse_style_from_name(j.at("style").get<std::string>());
        if (t.style == PulseStyle::hard) {
            const json h = j.value("hard", json::object());
            if (h.contains("field"))
                t.hard_field = number(h["field"], "hard.field");
            t.couplings_during_pulses = h.value("couplings_during_pulses", false);
            t.couplings_during_free = h.value("couplings_during_free", false);
        } else {
            for (const auto& [key, o] : j.at("targets").items()) {
                TargetEntry e;
                e.duration = number(o.at("duration"), "duration");
                if (o.contains("amplitudes"))
                    for (const auto& a : o["amplitudes"])
                        e.amplitudes.push_back(number(a, "amplitude"));
                if (o.contains("frequency"))
                    e.frequency = number(o["frequency"], "frequency");
                t.targets[std::stoi(key)] = e;
            }
            if (j.contains("phase_x"))
                t.phase_x = number(j["phase_x"], "phase_x");
            if (j.contains("phase_y"))
                t.phase_y = number(j["phase_y"], "phase_y");
            const auto ax = j.value("drive_axis", std::string("y"));
            if (ax.size() != 1)
                throw std::invalid_argument("pulse table: bad drive axis '" + ax + "'");
            t.drive_axis = axis_from_letter(ax[0]);
        }
        if (j.contains("interaction")) {
            const json& i = j["interaction"];
            if (i.contains("grid") && !(i["grid"].is_string() && i["grid"] == "auto"))
                t.grid = number(i["grid"], "interaction.grid");
            t.max_windings = i.value("max_windings", 0);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("pulse table: ") + e.what());
    }
    t.validate();
    return t;
}

PulseTable load_pulse_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open pulse table " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return pulse_table_from_text(ss.str());
}

PulseTable resolve_pulse_table(std::string_view spec)
{
    for (const auto& n : builtin_pulse_table_names())
        if (spec == n)
            return builtin_pulse_table(spec);
    if (std::filesystem::exists(std::filesystem::path(spec)))
        return load_pulse_table(std::filesystem::path(spec));
    throw std::invalid_argument("'" + std::string(spec) + "' is neither a builtin pulse table nor a readable file");
}

}  // namespace qce
