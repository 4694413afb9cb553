#pragma once

#include "bpw/classify/curves.hpp"
#include "bpw/classify/flow_modes.hpp"
#include "bpw/classify/orbits.hpp"
#include "bpw/classify/relaxed.hpp"
