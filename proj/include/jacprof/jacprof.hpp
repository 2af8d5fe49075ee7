#ifndef JACPROF_JACPROF_HPP
#define JACPROF_JACPROF_HPP

#include "exactfield.hpp"
#include "poly.hpp"
#include "curve.hpp"
#include "jacobian.hpp"
#include "profile.hpp"
#include "semigroup.hpp"
#include "constructions.hpp"
#include "rspace.hpp"

#endif
