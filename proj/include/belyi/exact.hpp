#pragma once

#include "belyi/errors.hpp"
#include "belyi/exact/factor.hpp"
#include "belyi/exact/integer_poly.hpp"
#include "belyi/exact/integers.hpp"
#include "belyi/exact/poly.hpp"
#include "belyi/exact/prime_field.hpp"
#include "belyi/exact/proj_point.hpp"
#include "belyi/exact/rational_map.hpp"
#include "belyi/exact/rational_roots.hpp"
