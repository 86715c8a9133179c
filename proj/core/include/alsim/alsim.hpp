#pragma once

#include "alsim/datasets.hpp"
#include "alsim/models.hpp"
#include "alsim/rng.hpp"
#include "alsim/sampling.hpp"
#include "alsim/simulation.hpp"
#include "alsim/special_functions.hpp"
#include "alsim/strategies.hpp"
