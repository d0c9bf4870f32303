#pragma once

#include "q6/bijections.hpp"
#include "q6/cache.hpp"
#include "q6/congruence.hpp"
#include "q6/core.hpp"
#include "q6/enumerate.hpp"
#include "q6/numbers.hpp"
#include "q6/report.hpp"
#include "q6/scan.hpp"
#include "q6/series.hpp"
#include "q6/suites.hpp"
#include "q6/tables.hpp"
