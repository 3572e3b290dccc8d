#pragma once

#include "ostrowski/errors.hpp"
#include "ostrowski/funcspace.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/pdfapp.hpp"
#include "ostrowski/psibounds.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/sweeps.hpp"
#include "ostrowski/types.hpp"
#include "ostrowski/verification.hpp"
