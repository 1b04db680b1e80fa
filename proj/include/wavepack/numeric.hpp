#pragma once

#include "wavepack/numeric/overlap.hpp"
#include "wavepack/numeric/propagator.hpp"
#include "wavepack/numeric/spectral.hpp"
#include "wavepack/numeric/transform.hpp"
