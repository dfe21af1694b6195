#pragma once

// Umbrella header for the whole library.

#include "biquat/connection.hpp"
#include "biquat/eigenstructure.hpp"
#include "biquat/ephemeris.hpp"
#include "biquat/field.hpp"
#include "biquat/frenet.hpp"
#include "biquat/grid.hpp"
#include "biquat/matrix.hpp"
#include "biquat/mechanics.hpp"
#include "biquat/ode.hpp"
#include "biquat/quaternion.hpp"
#include "biquat/random.hpp"
#include "biquat/relativity.hpp"
#include "biquat/scenarios.hpp"
#include "biquat/serialization.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"
#include "biquat/verify.hpp"
