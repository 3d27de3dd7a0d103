#pragma once

#include "chromatic/types.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/graph_io.hpp"
#include "chromatic/isomorphism.hpp"
#include "chromatic/poly.hpp"
#include "chromatic/properties.hpp"
#include "chromatic/counting.hpp"
#include "chromatic/cocircuits.hpp"
#include "chromatic/cnf.hpp"
#include "chromatic/gadgets.hpp"
#include "chromatic/identities.hpp"
