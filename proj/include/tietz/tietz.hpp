// SPDX-License-Identifier: Apache-2.0
#ifndef TIETZ_TIETZ_HPP_
#define TIETZ_TIETZ_HPP_

#include "tietz/errors.hpp"
#include "tietz/grid.hpp"
#include "tietz/oracle.hpp"
#include "tietz/potential.hpp"
#include "tietz/specfun.hpp"
#include "tietz/spectrum.hpp"
#include "tietz/wavefn.hpp"

#endif  // TIETZ_TIETZ_HPP_
