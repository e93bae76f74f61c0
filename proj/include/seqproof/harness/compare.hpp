#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/harness/bfile.hpp"
#include "seqproof/harness/oeis_client.hpp"
#include "seqproof/harness/report.hpp"

namespace seqproof {

struct AlignmentOptions {
  bool shift_search = true;
  int max_shift = 5;
  // A shift only counts as a match if at least this many terms overlap
  // (or every computed term does, for short inputs).
  std::size_t min_overlap = 10;
};

namespace detail {

struct ShiftOutcome {
  int shift = 0;
  std::size_t overlap = 0;
  std::size_t matched_prefix = 0;
  std::optional<Mismatch> mismatch;
};

// computed[i] is the term at index computed_offset + i; under shift s it is
// compared with the record's term at index computed_offset + i + s.
inline ShiftOutcome try_shift(const SequenceRecord& record, const std::vector<BigInt>& computed,
                              std::int64_t computed_offset, int shift) {
  ShiftOutcome out;
  out.shift = shift;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const std::int64_t index = computed_offset + static_cast<std::int64_t>(i) + shift;
    auto expected = record.at(index);
    if (!expected) continue;
    ++out.overlap;
    if (!out.mismatch) {
      if (*expected == computed[i]) {
        ++out.matched_prefix;
      } else {
        out.mismatch = Mismatch{index, *expected, computed[i]};
      }
    }
  }
  return out;
}

}  // namespace detail

// Aligns computed terms against a b-file. Shift 0 is tried first, then
// +-1, +-2, ... up to max_shift when shift_search is on. The report carries
// the winning shift in params["shift"]; on failure, the mismatch of the
// shift with the longest agreeing prefix.
inline VerificationReport compare_with_record(const SequenceRecord& record, const std::vector<BigInt>& computed,
                                              std::int64_t computed_offset, const AlignmentOptions& options = {}) {
  if (computed.empty()) throw std::invalid_argument("compare_with_oeis: computed list is empty");
  SweepRecorder rec("oeis-compare", computed_offset,
                    computed_offset + static_cast<std::int64_t>(computed.size()) - 1);
  rec.param("id", record.oeis_id);
  rec.param("computed_offset", std::to_string(computed_offset));

  std::vector<int> shifts = {0};
  if (options.shift_search) {
    for (int s = 1; s <= options.max_shift; ++s) {
      shifts.push_back(s);
      shifts.push_back(-s);
    }
  }
  const std::size_t need = std::min(options.min_overlap, computed.size());
  std::optional<detail::ShiftOutcome> best;
  for (int s : shifts) {
    detail::ShiftOutcome outcome = detail::try_shift(record, computed, computed_offset, s);
    if (outcome.overlap == 0) continue;
    if (!outcome.mismatch && outcome.overlap >= need) {
      rec.param("shift", std::to_string(s));
      rec.param("compared", std::to_string(outcome.overlap));
      return rec.finish();
    }
    if (!best || outcome.matched_prefix > best->matched_prefix) best = outcome;
  }
  if (!best) throw std::invalid_argument(record.oeis_id + ": no overlapping indices for any shift");
  rec.param("shift", std::to_string(best->shift));
  rec.param("compared", std::to_string(best->overlap));
  if (best->mismatch) {
    rec.check(best->mismatch->index, best->mismatch->expected, best->mismatch->got);
  } else {
    // Agreement but too little overlap to trust the alignment.
    rec.param("reason", "insufficient overlap");
    rec.mark_partial();
  }
  return rec.finish();
}

inline VerificationReport compare_with_oeis(OeisClient& client, const std::string& id,
                                            const std::vector<BigInt>& computed, std::int64_t computed_offset,
                                            bool online = false, const AlignmentOptions& options = {}) {
  return compare_with_record(client.fetch(id, online), computed, computed_offset, options);
}

}  // namespace seqproof
