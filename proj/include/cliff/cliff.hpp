#pragma once
// Umbrella include for the whole toolkit.

#include "algebra.hpp"
#include "gamma.hpp"
#include "constants.hpp"
#include "grid.hpp"
#include "fft.hpp"
#include "spectral.hpp"
#include "kernels.hpp"
#include "random.hpp"
#include "checks.hpp"
#include "zero_modes.hpp"
#include "suite.hpp"
#include "report_io.hpp"
