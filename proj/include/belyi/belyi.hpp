#pragma once

// The mathematical library. Serialization (belyi/io.hpp) and the command line
// (belyi/cli.hpp) also need the single headers in vendor/.
#include "belyi/combinatorics.hpp"
#include "belyi/construction.hpp"
#include "belyi/dynamics.hpp"
#include "belyi/exact.hpp"
#include "belyi/reduction.hpp"
#include "belyi/render.hpp"
