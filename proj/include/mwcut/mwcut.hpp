#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/flow.hpp"
#include "mwcut/graph.hpp"
#include "mwcut/io.hpp"
#include "mwcut/lp.hpp"
#include "mwcut/matching.hpp"
#include "mwcut/oracles.hpp"
#include "mwcut/problems.hpp"
#include "mwcut/random.hpp"
#include "mwcut/rational.hpp"
#include "mwcut/reductions.hpp"
#include "mwcut/solver.hpp"
#include "mwcut/transforms.hpp"
