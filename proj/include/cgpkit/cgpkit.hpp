/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_CGPKIT_HPP
#define CGPKIT_CGPKIT_HPP

#include "cgpkit/bistochastic.hpp"
#include "cgpkit/cgp.hpp"
#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/density_matrix.hpp"
#include "cgpkit/divided_difference.hpp"
#include "cgpkit/eigh.hpp"
#include "cgpkit/entropy.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/gates.hpp"
#include "cgpkit/identity_battery.hpp"
#include "cgpkit/json_format.hpp"
#include "cgpkit/kraus_channel.hpp"
#include "cgpkit/probability_vector.hpp"
#include "cgpkit/rng.hpp"
#include "cgpkit/simplex_sampler.hpp"
#include "cgpkit/special_functions.hpp"
#include "cgpkit/stochastic_matrix.hpp"

#endif // CGPKIT_CGPKIT_HPP
