#pragma once

// Umbrella header for the whole library.

#include "bfca/affine.hpp"
#include "bfca/cellular.hpp"
#include "bfca/class_registry.hpp"
#include "bfca/error.hpp"
#include "bfca/properties.hpp"
#include "bfca/report.hpp"
#include "bfca/sweep.hpp"
#include "bfca/transforms.hpp"
#include "bfca/truth_table.hpp"
