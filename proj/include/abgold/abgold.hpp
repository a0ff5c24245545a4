#pragma once

#include "abgold/error.hpp"
#include "abgold/sieve.hpp"
#include "abgold/classify.hpp"
#include "abgold/partition.hpp"
#include "abgold/parallel.hpp"
#include "abgold/claims.hpp"
#include "abgold/comet.hpp"
