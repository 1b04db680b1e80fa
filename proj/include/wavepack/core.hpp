#pragma once

#include "wavepack/core/complex_sqrt.hpp"
#include "wavepack/core/errors.hpp"
#include "wavepack/core/grid.hpp"
#include "wavepack/core/params.hpp"
#include "wavepack/core/quadrature.hpp"
