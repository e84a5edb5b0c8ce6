#pragma once

#include "qce/compile.hpp"
#include "qce/evolution.hpp"
#include "qce/execute.hpp"
#include "qce/experiments.hpp"
#include "qce/hamiltonian.hpp"
#include "qce/instruction.hpp"
#include "qce/library.hpp"
#include "qce/machine_io.hpp"
#include "qce/program_text.hpp"
#include "qce/pulse_table.hpp"
#include "qce/report.hpp"
#include "qce/state.hpp"
