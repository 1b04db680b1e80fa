#pragma once

#include "wavepack/analytic/autocorrelation.hpp"
#include "wavepack/analytic/moments.hpp"
#include "wavepack/analytic/wavefunction.hpp"
