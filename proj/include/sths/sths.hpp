#pragma once

// Umbrella header: the whole library in one include.

#include "sths/corpus.hpp"
#include "sths/exact.hpp"
#include "sths/graph.hpp"
#include "sths/greedy.hpp"
#include "sths/instance.hpp"
#include "sths/io.hpp"
#include "sths/matroid.hpp"
#include "sths/random_gen.hpp"
#include "sths/reductions.hpp"
#include "sths/solution.hpp"
#include "sths/subset.hpp"
#include "sths/union_find.hpp"
