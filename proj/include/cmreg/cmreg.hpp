// Umbrella header: the whole library.
#pragma once

#include "cmreg/complex_io.hpp"
#include "cmreg/families.hpp"
#include "cmreg/field.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/hilbert.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/io.hpp"
#include "cmreg/module.hpp"
#include "cmreg/monomial.hpp"
#include "cmreg/order.hpp"
#include "cmreg/polynomial.hpp"
#include "cmreg/resolution.hpp"
#include "cmreg/ring.hpp"
#include "cmreg/suites.hpp"
#include "cmreg/sumset.hpp"
#include "cmreg/verify.hpp"
