#pragma once

// Umbrella header: exact minimal Laplace transform of parabolic connections.

#include "minlap/compare.hpp"
#include "minlap/connection.hpp"
#include "minlap/degree.hpp"
#include "minlap/document.hpp"
#include "minlap/gaussian_rational.hpp"
#include "minlap/linalg.hpp"
#include "minlap/matrix.hpp"
#include "minlap/model.hpp"
#include "minlap/polynomial.hpp"
#include "minlap/predict.hpp"
#include "minlap/rational_function.hpp"
#include "minlap/reduce.hpp"
#include "minlap/report.hpp"
#include "minlap/roots.hpp"
#include "minlap/section.hpp"
#include "minlap/transform.hpp"
#include "minlap/validate.hpp"
