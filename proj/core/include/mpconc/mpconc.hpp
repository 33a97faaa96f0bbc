#pragma once

#include "mpconc/analysis.hpp"
#include "mpconc/bounds.hpp"
#include "mpconc/criteria.hpp"
#include "mpconc/generators.hpp"
#include "mpconc/report.hpp"
#include "mpconc/states.hpp"
#include "mpconc/tensor.hpp"
