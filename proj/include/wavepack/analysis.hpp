#pragma once

#include "wavepack/analysis/mandelstam.hpp"
#include "wavepack/analysis/saturation.hpp"
#include "wavepack/analysis/series.hpp"
#include "wavepack/analysis/timescales.hpp"
