#pragma once

#include "arith.hpp"
#include "core.hpp"
#include "linalg.hpp"
#include "graphs.hpp"
#include "localization.hpp"
#include "magnitudes.hpp"
#include "search.hpp"
#include "laurent.hpp"
#include "hattori.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "classify.hpp"
