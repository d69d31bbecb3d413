#pragma once

// Umbrella header.

#include "rational.hpp"
#include "sums.hpp"
#include "theorems.hpp"
#include "bench.hpp"
#include "io.hpp"
