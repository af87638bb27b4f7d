#ifndef MACMAHON_MACMAHON_HPP
#define MACMAHON_MACMAHON_HPP

// Umbrella header for the library (the CLI front end lives in cli.hpp).

#include "errors.hpp"
#include "generator_poly.hpp"
#include "identities.hpp"
#include "lambda_poly.hpp"
#include "linear_solve.hpp"
#include "numerics.hpp"
#include "qseries.hpp"
#include "quasi_shuffle.hpp"
#include "rational.hpp"
#include "series.hpp"

#endif // MACMAHON_MACMAHON_HPP
