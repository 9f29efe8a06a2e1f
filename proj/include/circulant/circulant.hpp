#pragma once

// Exact distances and diameters of the circulant graphs C_n(1, s).

#include "circulant/bounds.hpp"
#include "circulant/diameter.hpp"
#include "circulant/distance.hpp"
#include "circulant/formulas.hpp"
#include "circulant/oracle.hpp"
#include "circulant/params.hpp"
#include "circulant/path_classes.hpp"
#include "circulant/sweep.hpp"
