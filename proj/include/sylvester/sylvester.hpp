#pragma once

#include "sylvester/complex.hpp"
#include "sylvester/numeric_core.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/reduction.hpp"
#include "sylvester/solver.hpp"
