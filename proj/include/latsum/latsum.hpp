#pragma once

// Umbrella header for the library (everything except the CLI front end).

#include "latsum/chain.hpp"
#include "latsum/closedform.hpp"
#include "latsum/crosscheck.hpp"
#include "latsum/dp.hpp"
#include "latsum/errors.hpp"
#include "latsum/exact/bigrat.hpp"
#include "latsum/exact/poly.hpp"
#include "latsum/exact/ratfunc.hpp"
#include "latsum/exact/scalar.hpp"
#include "latsum/linalg.hpp"
#include "latsum/oracle.hpp"
#include "latsum/recguess.hpp"
#include "latsum/serialize.hpp"
#include "latsum/weights.hpp"
