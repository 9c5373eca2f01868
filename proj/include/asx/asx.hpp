#ifndef ASX_ASX_HPP
#define ASX_ASX_HPP

// Mixtures of activated simplices: learn bases on the unit sphere whose
// convex-hull facets approximate the data, then reconstruct, prune,
// classify, synthesize and lift 2D poses with them.

#include "applications.hpp"
#include "csv.hpp"
#include "dictionary.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "model_io.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "simplex_ls.hpp"
#include "simplices.hpp"
#include "synthetic.hpp"
#include "types.hpp"

#endif
