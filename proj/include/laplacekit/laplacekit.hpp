#pragma once

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/catalog.hpp"
#include "laplacekit/checks.hpp"
#include "laplacekit/complex.hpp"
#include "laplacekit/contour.hpp"
#include "laplacekit/grid_signal.hpp"
#include "laplacekit/hypersingular.hpp"
#include "laplacekit/quadrature.hpp"
#include "laplacekit/report.hpp"
#include "laplacekit/special.hpp"
#include "laplacekit/transform.hpp"
