#pragma once

#include "symzeta/config.hpp"
#include "symzeta/special.hpp"
#include "symzeta/combined.hpp"
#include "symzeta/zeros.hpp"
#include "symzeta/potential.hpp"
#include "symzeta/cli.hpp"
