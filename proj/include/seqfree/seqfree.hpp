#pragma once

#include "asymptotic_formulas.hpp"
#include "count_table.hpp"
#include "critical_point.hpp"
#include "dilog.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "functional_equation.hpp"
#include "generating_functions.hpp"
#include "json_export.hpp"
#include "numeric_types.hpp"
#include "partition.hpp"
#include "series_checks.hpp"
#include "series_eval.hpp"
#include "staircase.hpp"
#include "theta.hpp"
#include "truncated_series.hpp"
#include "verify.hpp"
