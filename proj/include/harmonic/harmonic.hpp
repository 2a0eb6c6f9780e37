#pragma once

#include "harmonic/error.hpp"
#include "harmonic/space.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/spline.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/calibration.hpp"
#include "harmonic/abel.hpp"
#include "harmonic/profiles.hpp"
#include "harmonic/transforms.hpp"
#include "harmonic/heat.hpp"
#include "harmonic/uncertainty.hpp"
#include "harmonic/verdict.hpp"
#include "harmonic/io.hpp"
