#pragma once

#include "lsdc/geom.hpp"
#include "lsdc/instance.hpp"
#include "lsdc/envelope.hpp"
#include "lsdc/cascade.hpp"
#include "lsdc/sigma.hpp"
#include "lsdc/farthest.hpp"
#include "lsdc/cap_chain.hpp"
#include "lsdc/prune.hpp"
#include "lsdc/reduce.hpp"
#include "lsdc/solve.hpp"
#include "lsdc/oracle.hpp"
#include "lsdc/generate.hpp"
#include "lsdc/io.hpp"
#include "lsdc/render.hpp"
#include "lsdc/bench.hpp"
