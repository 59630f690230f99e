/// \file convcode.hpp
/// Umbrella header.

#pragma once

#include "bounds.hpp"
#include "budget.hpp"
#include "catalog.hpp"
#include "code.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "metrics.hpp"
#include "poly.hpp"
#include "polymat.hpp"
#include "skew.hpp"
