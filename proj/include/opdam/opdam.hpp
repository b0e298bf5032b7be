#pragma once

#include "opdam/errors.hpp"
#include "opdam/root_lattice.hpp"
#include "opdam/gauss_2f1.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/hyp_f.hpp"
#include "opdam/hyp_fstar.hpp"
#include "opdam/cherednik.hpp"
#include "opdam/poly_oracle.hpp"
#include "opdam/laplace_kernel.hpp"
