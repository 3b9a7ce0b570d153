#pragma once

#include "fuzzyqp/alpha_extraction.hpp"
#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/fuzzy_number.hpp"
#include "fuzzyqp/kkt_oracle.hpp"
#include "fuzzyqp/problem.hpp"
#include "fuzzyqp/problem_io.hpp"
#include "fuzzyqp/qp_solver.hpp"
#include "fuzzyqp/report.hpp"
#include "fuzzyqp/sweep.hpp"
