#pragma once

#include "m0nbar/chen_coskun.hpp"
#include "m0nbar/diagonal.hpp"
#include "m0nbar/divisor_class.hpp"
#include "m0nbar/errors.hpp"
#include "m0nbar/extremal.hpp"
#include "m0nbar/hypertree.hpp"
#include "m0nbar/matrix.hpp"
#include "m0nbar/polynomial.hpp"
#include "m0nbar/serialization.hpp"
