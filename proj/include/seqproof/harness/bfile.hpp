#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqproof/core/bigint.hpp"
#include "seqproof/core/errors.hpp"

namespace seqproof {

// Parsed OEIS b-file: terms indexed contiguously from `offset`.
struct SequenceRecord {
  std::string oeis_id;
  std::int64_t offset = 0;
  std::vector<std::pair<std::int64_t, BigInt>> terms;

  std::vector<BigInt> values() const {
    std::vector<BigInt> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.second);
    return out;
  }

  std::optional<BigInt> at(std::int64_t index) const {
    if (terms.empty() || index < offset || index - offset >= static_cast<std::int64_t>(terms.size()))
      return std::nullopt;
    return terms[static_cast<std::size_t>(index - offset)].second;
  }

  friend bool operator==(const SequenceRecord& a, const SequenceRecord& b) {
    return a.oeis_id == b.oeis_id && a.offset == b.offset && a.terms == b.terms;
  }
};

// "A" followed by exactly six digits.
inline bool is_valid_oeis_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

inline std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

// One b-file line: "index value", with '#' comments and blank lines skipped
// (nullopt) and trailing whitespace tolerated.
inline std::optional<std::pair<std::int64_t, BigInt>> parse_bfile_line(std::string_view line) {
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  std::size_t start = 0;
  while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
  line.remove_prefix(start);
  if (line.empty() || line[0] == '#') return std::nullopt;

  const std::size_t gap = line.find_first_of(" \t");
  if (gap == std::string_view::npos) throw MalformedBFile("expected 'index value', got '" + std::string(line) + "'");
  std::string_view index_text = line.substr(0, gap);
  std::string_view rest = line.substr(gap);
  while (!rest.empty() && (rest[0] == ' ' || rest[0] == '\t')) rest.remove_prefix(1);
  if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
    throw MalformedBFile("expected 'index value', got '" + std::string(line) + "'");
  try {
    BigInt index = parse_bigint(index_text);
    if (!index.fits_slong_p()) throw MalformedBFile("index out of range in '" + std::string(line) + "'");
    return std::make_pair(static_cast<std::int64_t>(index.get_si()), parse_bigint(rest));
  } catch (const std::invalid_argument&) {
    throw MalformedBFile("non-numeric field in '" + std::string(line) + "'");
  }
}

inline SequenceRecord parse_bfile(const std::string& oeis_id, const std::string& text) {
  SequenceRecord record;
  record.oeis_id = oeis_id;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::optional<std::pair<std::int64_t, BigInt>> term;
    try {
      term = parse_bfile_line(line);
    } catch (const MalformedBFile& e) {
      throw MalformedBFile(oeis_id + " line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!term) continue;
    if (record.terms.empty()) {
      record.offset = term->first;
    } else if (term->first != record.terms.back().first + 1) {
      throw MalformedBFile(oeis_id + " line " + std::to_string(line_no) + ": index " +
                           std::to_string(term->first) + " does not follow " +
                           std::to_string(record.terms.back().first));
    }
    record.terms.push_back(std::move(*term));
  }
  if (record.terms.empty()) throw MalformedBFile(oeis_id + ": no terms");
  return record;
}

}  // namespace seqproof
