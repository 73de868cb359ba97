#pragma once

// Exact core: kernel, centers, curves and the scenario registry.
// The renderer and the command line live in render.hpp and cli.hpp.

#include "tricurve/center_expr.hpp"
#include "tricurve/centers.hpp"
#include "tricurve/curves.hpp"
#include "tricurve/errors.hpp"
#include "tricurve/kernel.hpp"
#include "tricurve/linalg.hpp"
#include "tricurve/poly.hpp"
#include "tricurve/rational.hpp"
#include "tricurve/report.hpp"
#include "tricurve/scenarios.hpp"
