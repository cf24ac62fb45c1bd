#pragma once

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/expectile.hpp"
#include "expskew/inference.hpp"
#include "expskew/numerics.hpp"
#include "expskew/order.hpp"
#include "expskew/rng.hpp"
#include "expskew/sample.hpp"
#include "expskew/simulate.hpp"
#include "expskew/skewness.hpp"
