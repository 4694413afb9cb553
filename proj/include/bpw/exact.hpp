#pragma once

#include "bpw/error.hpp"
#include "bpw/exact/polynomial.hpp"
#include "bpw/exact/rational.hpp"
#include "bpw/exact/scalar.hpp"
#include "bpw/exact/scalar_parse.hpp"
#include "bpw/exact/variables.hpp"
