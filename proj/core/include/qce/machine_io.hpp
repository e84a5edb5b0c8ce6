#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qce/hamiltonian.hpp"

namespace qce {

std::string machine_to_text(const MachineModel& m);
MachineModel machine_from_text(std::string_view text);

MachineModel load_machine(const std::filesystem::path& path);
void save_machine(const MachineModel& m, const std::filesystem::path& path);

// preset name, or path to a machine file
MachineModel resolve_machine(std::string_view spec);

}  // namespace qce
