#pragma once

// Exact computation with the generalized symmetries of quasiperiodic
// torus flows: number-field arithmetic, affine lifts, multiplier search,
// and finite semidirect-product certification.

#include "qpsym/analysis.hpp"
#include "qpsym/errors.hpp"
#include "qpsym/flow.hpp"
#include "qpsym/flow_file.hpp"
#include "qpsym/group.hpp"
#include "qpsym/lift.hpp"
#include "qpsym/matrix.hpp"
#include "qpsym/number_field.hpp"
#include "qpsym/polynomial.hpp"
#include "qpsym/rational.hpp"
#include "qpsym/search.hpp"
