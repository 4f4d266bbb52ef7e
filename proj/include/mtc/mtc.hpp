#pragma once

// Everything at once.

#include "mtc/catalog.hpp"
#include "mtc/center.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/dataio.hpp"
#include "mtc/dft.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/indicators.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/parallel.hpp"
#include "mtc/spectra.hpp"
