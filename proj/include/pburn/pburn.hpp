#pragma once

#include "pburn/error.hpp"
#include "pburn/geometry.hpp"
#include "pburn/delaunay.hpp"
#include "pburn/domain.hpp"
#include "pburn/geodesic.hpp"
#include "pburn/burn.hpp"
#include "pburn/solvers.hpp"
#include "pburn/sliceable.hpp"
#include "pburn/gadget.hpp"
#include "pburn/io.hpp"
#include "pburn/svg.hpp"
#include "pburn/bench.hpp"
