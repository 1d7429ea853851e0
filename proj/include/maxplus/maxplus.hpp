#pragma once

/// Convenience include for the whole library.

#include "maxplus/cumulative.hpp"
#include "maxplus/dense.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/frechet.hpp"
#include "maxplus/io.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/random.hpp"
#include "maxplus/rational.hpp"
#include "maxplus/selfcheck.hpp"
#include "maxplus/tropical.hpp"
