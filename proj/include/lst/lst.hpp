#pragma once

#include "lst/bench.hpp"
#include "lst/contraction.hpp"
#include "lst/decomposition.hpp"
#include "lst/generators.hpp"
#include "lst/graph.hpp"
#include "lst/io.hpp"
#include "lst/metrics.hpp"
#include "lst/shortest_paths.hpp"
#include "lst/tree.hpp"
