#pragma once

#include "clifford.hpp"
#include "cohomology.hpp"
#include "ext_simples.hpp"
#include "index_set.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "moduli.hpp"
#include "oracle.hpp"
#include "partitions.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "resolutions.hpp"
#include "verify.hpp"
