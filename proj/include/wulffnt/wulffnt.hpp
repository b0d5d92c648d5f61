#pragma once

// Umbrella header for the library (the CLI front end lives in cli.hpp).

#include "wulffnt/counting.hpp"
#include "wulffnt/entropy.hpp"
#include "wulffnt/geometry.hpp"
#include "wulffnt/io.hpp"
#include "wulffnt/shapes.hpp"
#include "wulffnt/special_fns.hpp"
#include "wulffnt/wulff.hpp"
