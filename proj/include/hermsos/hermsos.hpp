#pragma once

#include "hermsos/bareiss.hpp"
#include "hermsos/coeff_matrix.hpp"
#include "hermsos/divide.hpp"
#include "hermsos/errors.hpp"
#include "hermsos/io.hpp"
#include "hermsos/multi_index.hpp"
#include "hermsos/polynomial.hpp"
#include "hermsos/random.hpp"
#include "hermsos/scalar.hpp"
#include "hermsos/sos.hpp"
#include "hermsos/verify.hpp"
