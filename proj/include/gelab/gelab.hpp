#pragma once

#include "gelab/characterization.hpp"
#include "gelab/constructions.hpp"
#include "gelab/entropy.hpp"
#include "gelab/errors.hpp"
#include "gelab/fractional.hpp"
#include "gelab/graph.hpp"
#include "gelab/independent_sets.hpp"
#include "gelab/io.hpp"
#include "gelab/rational.hpp"
