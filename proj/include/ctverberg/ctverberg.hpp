#pragma once

#include "decomposition.hpp"
#include "geometry.hpp"
#include "homology.hpp"
#include "index_calculus.hpp"
#include "json_io.hpp"
#include "lp.hpp"
#include "modp.hpp"
#include "product_complex.hpp"
#include "rational.hpp"
#include "simplicial_complex.hpp"
#include "symmetry.hpp"

namespace ctv {
inline constexpr const char* kVersion = "0.1.0";
}
