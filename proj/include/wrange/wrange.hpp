#pragma once

#include "wrange/bounds.hpp"
#include "wrange/eig.hpp"
#include "wrange/errors.hpp"
#include "wrange/fuzz.hpp"
#include "wrange/io.hpp"
#include "wrange/matrix.hpp"
#include "wrange/nrange.hpp"
#include "wrange/randgen.hpp"
#include "wrange/rng.hpp"
#include "wrange/sector.hpp"
#include "wrange/version.hpp"
