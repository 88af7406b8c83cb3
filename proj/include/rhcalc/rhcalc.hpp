#pragma once

#include <rhcalc/errors.hpp>
#include <rhcalc/exact_linalg.hpp>
#include <rhcalc/gauge.hpp>
#include <rhcalc/graded.hpp>
#include <rhcalc/groups.hpp>
#include <rhcalc/limits.hpp>
#include <rhcalc/simplicial.hpp>
#include <rhcalc/verify.hpp>
