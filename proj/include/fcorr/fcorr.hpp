#pragma once

#include "fcorr/interval.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/correlation.hpp"
#include "fcorr/range.hpp"
#include "fcorr/arithmetic.hpp"
#include "fcorr/closed_form.hpp"
#include "fcorr/oracle.hpp"
