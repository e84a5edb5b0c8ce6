#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qce/instruction.hpp"

namespace qce {

class ParseError : public std::invalid_argument {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Grammar in docs/program-format.md. Statements run in the order written.
QuantumProgram parse_program(std::string_view text);
std::string emit_program(const QuantumProgram& p);
std::string emit_gate(const Gate& g);
std::string format_angle(double a);
double parse_angle(std::string_view s);

QuantumProgram load_program(const std::filesystem::path& path);

}  // namespace qce
