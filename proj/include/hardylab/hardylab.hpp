#pragma once
//
// Umbrella header.
//

#include "hardylab/blaschke.hpp"
#include "hardylab/defaults.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/factorization.hpp"
#include "hardylab/fft.hpp"
#include "hardylab/funcspec.hpp"
#include "hardylab/grid.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/optimize.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/shift.hpp"
#include "hardylab/taylor.hpp"
