#pragma once

#include "weakkam/discount.hpp"
#include "weakkam/error.hpp"
#include "weakkam/grid_model.hpp"
#include "weakkam/mather.hpp"
#include "weakkam/parallel.hpp"
#include "weakkam/tropical.hpp"
#include "weakkam/weak_kam.hpp"
