#pragma once

#include "bpw/exprio/algebra_file.hpp"
#include "bpw/exprio/eval.hpp"
#include "bpw/exprio/expr.hpp"
#include "bpw/exprio/report.hpp"
