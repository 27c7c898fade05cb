#pragma once

#include "campana/arith/bigint.hpp"
#include "campana/arith/factor.hpp"
#include "campana/arith/primality.hpp"
#include "campana/arith/rational.hpp"
#include "campana/arith/s_integers.hpp"
#include "campana/cpairs.hpp"
#include "campana/errors.hpp"
#include "campana/geometry.hpp"
#include "campana/lattice.hpp"
#include "campana/search.hpp"
#include "campana/semigroups.hpp"
