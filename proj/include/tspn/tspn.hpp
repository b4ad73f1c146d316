#pragma once

#include "tspn/approx.hpp"
#include "tspn/fermat.hpp"
#include "tspn/generate.hpp"
#include "tspn/geometry.hpp"
#include "tspn/io.hpp"
#include "tspn/minkowski.hpp"
#include "tspn/oracle.hpp"
#include "tspn/parallel.hpp"
#include "tspn/report.hpp"
#include "tspn/structure.hpp"
#include "tspn/svg.hpp"
#include "tspn/sweeps.hpp"
