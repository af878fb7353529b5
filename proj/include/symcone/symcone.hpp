#pragma once

// Umbrella header for the mathematical library. JSON I/O and the command
// driver (json_io.hpp, cli.hpp) additionally need nlohmann/json.

#include "symcone/caratheodory.hpp"
#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/dual_chain.hpp"
#include "symcone/errors.hpp"
#include "symcone/fs_vector.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/monoid.hpp"
#include "symcone/orbit.hpp"
#include "symcone/permutation.hpp"
#include "symcone/rational.hpp"
