#pragma once

#include "hulthen/error.hpp"
#include "hulthen/specfun.hpp"
#include "hulthen/nu_core.hpp"
#include "hulthen/model.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/wavefn.hpp"
#include "hulthen/verify.hpp"
