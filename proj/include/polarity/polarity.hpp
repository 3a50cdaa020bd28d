#pragma once

#include "polarity/canonical.hpp"
#include "polarity/caps.hpp"
#include "polarity/embedding.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/generate.hpp"
#include "polarity/io.hpp"
#include "polarity/lattice.hpp"
#include "polarity/morphisms.hpp"
#include "polarity/relation.hpp"
#include "polarity/subset.hpp"
#include "polarity/sweep.hpp"
