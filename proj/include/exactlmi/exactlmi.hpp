#pragma once

#include "arith.hpp"
#include "certify.hpp"
#include "generators.hpp"
#include "groebner.hpp"
#include "incidence.hpp"
#include "pencil.hpp"
#include "quotient.hpp"
#include "realroots.hpp"
#include "reduce.hpp"
#include "report.hpp"
#include "rur.hpp"
#include "solve.hpp"
