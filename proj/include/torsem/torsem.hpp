#pragma once

// Convenience umbrella: the whole library in one include.

#include "torsem/cone.hpp"
#include "torsem/cyclotomic.hpp"
#include "torsem/errors.hpp"
#include "torsem/grading.hpp"
#include "torsem/io.hpp"
#include "torsem/lattice.hpp"
#include "torsem/matrix.hpp"
#include "torsem/newton.hpp"
#include "torsem/numeric.hpp"
#include "torsem/qo.hpp"
#include "torsem/random.hpp"
#include "torsem/semigroup.hpp"
#include "torsem/series.hpp"
#include "torsem/vec.hpp"
