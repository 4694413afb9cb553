#pragma once

#include "bpw/ffield/algebra.hpp"
#include "bpw/ffield/delta.hpp"
#include "bpw/ffield/engine.hpp"
#include "bpw/ffield/sugawara.hpp"
#include "bpw/ffield/suites.hpp"
