#pragma once

#include "polymoments/antiderivatives.hpp"
#include "polymoments/branch_integrals.hpp"
#include "polymoments/chord_cdf.hpp"
#include "polymoments/circle.hpp"
#include "polymoments/distance_pdf.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/moments.hpp"
#include "polymoments/monte_carlo.hpp"
#include "polymoments/output_record.hpp"
#include "polymoments/quadrature.hpp"
#include "polymoments/summation.hpp"
#include "polymoments/verify.hpp"
