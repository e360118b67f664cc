// onesided.hpp — umbrella header.

#pragma once

#include "onesided/angle.hpp"
#include "onesided/bigint.hpp"
#include "onesided/bounds.hpp"
#include "onesided/dd.hpp"
#include "onesided/extremum.hpp"
#include "onesided/json_io.hpp"
#include "onesided/lattice.hpp"
#include "onesided/quadrature.hpp"
#include "onesided/rational.hpp"
#include "onesided/relation_scan.hpp"
#include "onesided/spectrum.hpp"
#include "onesided/structure.hpp"
