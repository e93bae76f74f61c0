#pragma once

#include "seqproof/core/bigint.hpp"
#include "seqproof/core/enclosure.hpp"
#include "seqproof/core/errors.hpp"
#include "seqproof/core/euler_maclaurin.hpp"
#include "seqproof/core/generating_function.hpp"
#include "seqproof/core/interval.hpp"
#include "seqproof/core/polynomial.hpp"
