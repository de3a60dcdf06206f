#pragma once

#include "scalar.hpp"
#include "linalg.hpp"
#include "subspace.hpp"
#include "affine.hpp"
#include "isometry.hpp"
#include "elements.hpp"
#include "factorization.hpp"
#include "poset.hpp"
#include "hasse.hpp"
#include "sampling.hpp"
#include "oracle.hpp"
