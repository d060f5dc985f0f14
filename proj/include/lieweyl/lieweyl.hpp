#pragma once

#include "lieweyl/check.hpp"
#include "lieweyl/enveloping.hpp"
#include "lieweyl/errors.hpp"
#include "lieweyl/format.hpp"
#include "lieweyl/json_io.hpp"
#include "lieweyl/kappa.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/parse.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/random.hpp"
#include "lieweyl/realization.hpp"
#include "lieweyl/scalar.hpp"
#include "lieweyl/series.hpp"
#include "lieweyl/star.hpp"
#include "lieweyl/suites.hpp"
#include "lieweyl/weyl.hpp"
