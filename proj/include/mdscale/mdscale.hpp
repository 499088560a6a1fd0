#pragma once

#include "mdscale/cmds.hpp"
#include "mdscale/error_decomposition.hpp"
#include "mdscale/evaluate.hpp"
#include "mdscale/io.hpp"
#include "mdscale/linalg.hpp"
#include "mdscale/lower.hpp"
#include "mdscale/metrics.hpp"
#include "mdscale/sstress.hpp"
#include "mdscale/version.hpp"
