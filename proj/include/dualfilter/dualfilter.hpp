#pragma once

#include "dualfilter/duality.hpp"
#include "dualfilter/error.hpp"
#include "dualfilter/formulations.hpp"
#include "dualfilter/io.hpp"
#include "dualfilter/lp.hpp"
#include "dualfilter/model.hpp"
#include "dualfilter/oracle.hpp"
#include "dualfilter/propagation.hpp"
#include "dualfilter/rational.hpp"
#include "dualfilter/report.hpp"
#include "dualfilter/support.hpp"
#include "dualfilter/validate.hpp"
