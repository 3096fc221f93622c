#pragma once

#include "witt/error.hpp"
#include "witt/gaussian_rational.hpp"
#include "witt/matrix.hpp"
#include "witt/polynomial.hpp"
#include "witt/monomial.hpp"
#include "witt/multivector.hpp"
#include "witt/notation.hpp"
#include "witt/spectral.hpp"
#include "witt/embed.hpp"
#include "witt/symgroup.hpp"
#include "witt/repdecomp.hpp"
