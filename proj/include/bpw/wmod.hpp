#pragma once

#include "bpw/wmod/commutator.hpp"
#include "bpw/wmod/modes.hpp"
#include "bpw/wmod/module.hpp"
#include "bpw/wmod/slices.hpp"
#include "bpw/wmod/suites.hpp"
