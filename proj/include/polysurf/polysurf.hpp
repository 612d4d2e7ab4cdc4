#ifndef POLYSURF_POLYSURF_HPP
#define POLYSURF_POLYSURF_HPP

#include "polysurf/complex.hpp"
#include "polysurf/cover.hpp"
#include "polysurf/cycles.hpp"
#include "polysurf/geometry.hpp"
#include "polysurf/gf2.hpp"
#include "polysurf/presentation.hpp"
#include "polysurf/report.hpp"

#endif
