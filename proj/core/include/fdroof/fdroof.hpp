#pragma once

#include "fdroof/cost_to_solution.hpp"
#include "fdroof/equation_catalog.hpp"
#include "fdroof/error.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/kv_document.hpp"
#include "fdroof/machine_model.hpp"
#include "fdroof/reference_kernel.hpp"
#include "fdroof/report.hpp"
#include "fdroof/roofline_analysis.hpp"
#include "fdroof/svg_chart.hpp"
