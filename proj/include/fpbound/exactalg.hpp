#pragma once

// Exact arithmetic: GF(2) Laurent polynomials and their fraction-field rank,
// integer matrices with Smith normal form, and small GF(2) linear algebra.

#include "fpbound/exact/gf2.hpp"
#include "fpbound/exact/intmatrix.hpp"
#include "fpbound/exact/laurent.hpp"
