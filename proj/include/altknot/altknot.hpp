#pragma once

// Umbrella header.

#include "altknot/planar_map.hpp"
#include "altknot/diagram.hpp"
#include "altknot/canonical.hpp"
#include "altknot/goeritz.hpp"
#include "altknot/conway.hpp"
#include "altknot/reidemeister.hpp"
#include "altknot/tangle.hpp"
#include "altknot/moves.hpp"
#include "altknot/recognition.hpp"
#include "altknot/enumerate.hpp"
