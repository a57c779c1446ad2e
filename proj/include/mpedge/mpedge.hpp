#pragma once

#include "mpedge/density.hpp"
#include "mpedge/edges.hpp"
#include "mpedge/error.hpp"
#include "mpedge/io.hpp"
#include "mpedge/manova.hpp"
#include "mpedge/mc.hpp"
#include "mpedge/measure.hpp"
#include "mpedge/population.hpp"
#include "mpedge/rng.hpp"
#include "mpedge/spectral.hpp"
#include "mpedge/swap.hpp"
#include "mpedge/tw.hpp"
#include "mpedge/tw_test.hpp"
