#pragma once

#include "chilab/bounds.hpp"
#include "chilab/clique.hpp"
#include "chilab/coloring.hpp"
#include "chilab/connectivity.hpp"
#include "chilab/excess.hpp"
#include "chilab/generate.hpp"
#include "chilab/graph.hpp"
#include "chilab/graph6.hpp"
#include "chilab/invariants.hpp"
#include "chilab/q4.hpp"
#include "chilab/rational.hpp"
#include "chilab/vertex_set.hpp"
