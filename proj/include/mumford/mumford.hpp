#pragma once

#include "mumford/builtin_surfaces.hpp"
#include "mumford/chern.hpp"
#include "mumford/errors.hpp"
#include "mumford/exact_core.hpp"
#include "mumford/intersection.hpp"
#include "mumford/resolution_model.hpp"
#include "mumford/stability.hpp"
