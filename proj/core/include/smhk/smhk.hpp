#pragma once

#include "smhk/error.hpp"
#include "smhk/linalg.hpp"
#include "smhk/oracle.hpp"
#include "smhk/sim.hpp"
#include "smhk/spectral.hpp"
#include "smhk/topology.hpp"
#include "smhk/weights.hpp"
