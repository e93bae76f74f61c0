#pragma once

#include "seqproof/harness/bfile.hpp"
#include "seqproof/harness/compare.hpp"
#include "seqproof/harness/families.hpp"
#include "seqproof/harness/oeis_client.hpp"
#include "seqproof/harness/report.hpp"
