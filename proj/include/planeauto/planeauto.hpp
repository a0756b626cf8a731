#pragma once

#include "planeauto/embeddings.hpp"
#include "planeauto/et_engine.hpp"
#include "planeauto/groebner.hpp"
#include "planeauto/param_curves.hpp"
#include "planeauto/parse.hpp"
#include "planeauto/power_root.hpp"
#include "planeauto/resultant.hpp"
#include "planeauto/tame_auto.hpp"
