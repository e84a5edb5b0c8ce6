#pragma once

#include <filesystem>
#include <string>

#include "qce/experiments.hpp"

namespace qce {

// CSV: header line, then one row per record, fixed 6-decimal numbers.
std::string table_csv(const TableReport& t);
std::string table_text(const TableReport& t);

std::string scatter_csv(const ScatterResult& s);
std::string scatter_summary(const ScatterResult& s);

std::string trajectory_csv(const DissipationResult& d);
std::string dissipation_summary(const DissipationResult& d);

std::string grover4_csv(const Grover4Report& g);
std::string grover4_text(const Grover4Report& g);

std::string oracle_csv(const OracleReport& o);
std::string oracle_summary(const OracleReport& o);

std::string q_line(const MeasurementRecord& r);

void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qce
