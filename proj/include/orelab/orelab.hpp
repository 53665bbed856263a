#pragma once

// Umbrella header: the whole library.

#include "orelab/errors.hpp"
#include "orelab/ring.hpp"
#include "orelab/structured.hpp"
#include "orelab/morphism.hpp"
#include "orelab/ore.hpp"
#include "orelab/verdict.hpp"
#include "orelab/deciders.hpp"
#include "orelab/kernel.hpp"
#include "orelab/poly_search.hpp"
#include "orelab/annihilator.hpp"
#include "orelab/properties.hpp"
#include "orelab/replay.hpp"
#include "orelab/spec_io.hpp"
#include "orelab/corpus.hpp"
#include "orelab/harness.hpp"
