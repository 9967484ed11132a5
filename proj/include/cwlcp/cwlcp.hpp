#pragma once

#include "cwlcp/checkmodel.hpp"
#include "cwlcp/cwexpr.hpp"
#include "cwlcp/dpcore.hpp"
#include "cwlcp/drivers.hpp"
#include "cwlcp/errors.hpp"
#include "cwlcp/graph.hpp"
#include "cwlcp/oracle.hpp"
#include "cwlcp/sizedfa.hpp"
#include "cwlcp/solution.hpp"
#include "cwlcp/weights.hpp"
