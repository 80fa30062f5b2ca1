#pragma once

#include "pairlab/acc.hpp"
#include "pairlab/bfunction.hpp"
#include "pairlab/effective.hpp"
#include "pairlab/error.hpp"
#include "pairlab/lct.hpp"
#include "pairlab/newton_lp.hpp"
#include "pairlab/poly.hpp"
#include "pairlab/rational.hpp"
#include "pairlab/snc.hpp"
