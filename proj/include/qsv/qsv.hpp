#pragma once

// Umbrella header for the qsv quantum state-vector simulation library.

#include "qsv/complex.hpp"
#include "qsv/deutsch.hpp"
#include "qsv/error.hpp"
#include "qsv/matrix.hpp"
#include "qsv/matrix_io.hpp"
#include "qsv/qcl/checker.hpp"
#include "qsv/qcl/diagnostic.hpp"
#include "qsv/qcl/interpreter.hpp"
#include "qsv/qcl/parser.hpp"
#include "qsv/qcl/program.hpp"
#include "qsv/qcl/report.hpp"
#include "qsv/random.hpp"
#include "qsv/state.hpp"
