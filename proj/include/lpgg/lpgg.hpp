#pragma once

#include "lpgg/algebra.hpp"
#include "lpgg/atlas.hpp"
#include "lpgg/calculus.hpp"
#include "lpgg/errors.hpp"
#include "lpgg/fit.hpp"
#include "lpgg/io.hpp"
#include "lpgg/matrix.hpp"
#include "lpgg/multivector.hpp"
#include "lpgg/null_frame.hpp"
#include "lpgg/radical.hpp"
#include "lpgg/random.hpp"
#include "lpgg/rational.hpp"
#include "lpgg/report.hpp"
#include "lpgg/scalar.hpp"
#include "lpgg/simplex.hpp"
#include "lpgg/spectral.hpp"
#include "lpgg/star.hpp"
#include "lpgg/stated.hpp"
#include "lpgg/text.hpp"
#include "lpgg/verify.hpp"
