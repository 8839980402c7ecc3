#pragma once

#include "census.hpp"
#include "compositions.hpp"
#include "errors.hpp"
#include "hword.hpp"
#include "ndet.hpp"
#include "predicates.hpp"
#include "skew_matrix.hpp"
#include "sym_bridge.hpp"
