#pragma once

#include "straightness/analytic.hpp"
#include "straightness/core.hpp"
#include "straightness/csv.hpp"
#include "straightness/experiments.hpp"
#include "straightness/generators.hpp"
#include "straightness/graph_json.hpp"
#include "straightness/metrics.hpp"
#include "straightness/shortest_paths.hpp"
#include "straightness/svg.hpp"
