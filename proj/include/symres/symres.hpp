#pragma once

#include "symres/field.hpp"
#include "symres/monomial.hpp"
#include "symres/ring.hpp"
#include "symres/polynomial.hpp"
#include "symres/free_module.hpp"
#include "symres/matrix.hpp"
#include "symres/complex.hpp"
#include "symres/groebner.hpp"
#include "symres/resolution.hpp"
#include "symres/hilbert.hpp"
#include "symres/constructions.hpp"
#include "symres/verify.hpp"
#include "symres/io.hpp"
