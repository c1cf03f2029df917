#pragma once

#include "qweyl/central.hpp"
#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/exact_matrix.hpp"
#include "qweyl/int_matrix.hpp"
#include "qweyl/parameters.hpp"
#include "qweyl/pi_degree.hpp"
#include "qweyl/simple_modules.hpp"
#include "qweyl/skew_normal_form.hpp"
#include "qweyl/smith_normal_form.hpp"
#include "qweyl/weyl_algebra.hpp"
