#pragma once

// Sharp Toeplitz-determinant bounds for Ma-Minda starlike and convex classes.

#include "toeplitz/series.hpp"
#include "toeplitz/phi_catalog.hpp"
#include "toeplitz/bounds.hpp"
#include "toeplitz/extremal.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/report.hpp"
