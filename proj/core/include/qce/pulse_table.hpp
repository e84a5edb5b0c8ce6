#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qce/state.hpp"

namespace qce {

enum class PulseStyle {
    resonant,  // linear drive on both spins of the target's pair, tuned to the target
    rotating,  // circular drive on the target only, co-rotating with its precession
    hard,      // strong static transverse fields on all listed spins
};

std::string pulse_style_name(PulseStyle s);
PulseStyle pulse_style_from_name(std::string_view s);

// Parameters for a +-90 degree rotation of the first (1) or second (2) spin of
// an addressable pair.
struct TargetEntry {
    std::vector<double> amplitudes;    // resonant: drive on the pair's first and second spin
    double duration = 0.0;
    std::optional<double> frequency;   // default: Zeeman strength of the target

    bool operator==(const TargetEntry&) const = default;
};

struct PulseTable {
    std::string name;
    PulseStyle style = PulseStyle::resonant;
    std::map<int, TargetEntry> targets;
    Axis drive_axis = Axis::y;  // resonant only
    double phase_x = 0.0;       // drive phase for +90 about x; inverse adds pi
    double phase_y = 0.0;

    // hard style
    double hard_field = 200.0;
    bool couplings_during_pulses = false;
    bool couplings_during_free = false;

    // interaction gates: duration grid (0 means derive from the machine) and
    // the number of extra 4 pi windings considered when snapping to it
    double grid = 0.0;
    int max_windings = 0;

    void validate() const;
    const TargetEntry& target(int local) const;
    bool operator==(const PulseTable&) const = default;
};

PulseTable builtin_pulse_table(std::string_view name);
std::vector<std::string> builtin_pulse_table_names();

std::string pulse_table_to_text(const PulseTable& t);
PulseTable pulse_table_from_text(std::string_view text);
PulseTable load_pulse_table(const std::filesystem::path& path);
// builtin name, or path to a pulse-table file
PulseTable resolve_pulse_table(std::string_view spec);

}  // namespace qce
