#pragma once

// Umbrella header.

#include "avn/distribution.hpp"
#include "avn/epr.hpp"
#include "avn/errors.hpp"
#include "avn/gf2.hpp"
#include "avn/graph.hpp"
#include "avn/lcclass.hpp"
#include "avn/partitions.hpp"
#include "avn/pauli.hpp"
#include "avn/report.hpp"
#include "avn/search.hpp"
#include "avn/stabilizer.hpp"
#include "avn/witness.hpp"
