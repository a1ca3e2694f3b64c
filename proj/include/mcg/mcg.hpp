#pragma once

#include "mcg/errors.hpp"
#include "mcg/rational.hpp"
#include "mcg/interval.hpp"
#include "mcg/word.hpp"
#include "mcg/quad_real.hpp"
#include "mcg/thurston.hpp"
#include "mcg/curve_families.hpp"
#include "mcg/bounds.hpp"
#include "mcg/johnson.hpp"
#include "mcg/search.hpp"
#include "mcg/json_io.hpp"
#include "mcg/verify.hpp"
