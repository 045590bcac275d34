#pragma once

#include "geometry.hpp"
#include "disk_series.hpp"
#include "holo_function.hpp"
#include "random.hpp"
#include "sampling.hpp"
#include "pointwise.hpp"
#include "seminorms.hpp"
#include "quadrature.hpp"
#include "families.hpp"
#include "harness.hpp"
#include "function_io.hpp"
#include "suites.hpp"
#include "report.hpp"
