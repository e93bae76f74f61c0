#pragma once

#include "seqproof/algebraic.hpp"
#include "seqproof/analytic.hpp"
#include "seqproof/core.hpp"
#include "seqproof/greedy.hpp"
#include "seqproof/harness.hpp"
#include "seqproof/lattice.hpp"
#include "seqproof/words.hpp"
