#pragma once

#include "pgreg/asymptotics.hpp"
#include "pgreg/experiments.hpp"
#include "pgreg/io.hpp"
#include "pgreg/kernels.hpp"
#include "pgreg/pinsker.hpp"
#include "pgreg/regression.hpp"
#include "pgreg/rng.hpp"
#include "pgreg/sequence.hpp"
#include "pgreg/shrinkage.hpp"
#include "pgreg/stats.hpp"
#include "pgreg/test_functions.hpp"
#include "pgreg/trig.hpp"
#include "pgreg/weights.hpp"
