#pragma once

#include "apcrucial/errors.hpp"
#include "apcrucial/permutation.hpp"
#include "apcrucial/notation.hpp"
#include "apcrucial/pattern.hpp"
#include "apcrucial/crucial.hpp"
#include "apcrucial/constructions.hpp"
#include "apcrucial/search.hpp"
#include "apcrucial/cache.hpp"
#include "apcrucial/facts.hpp"
