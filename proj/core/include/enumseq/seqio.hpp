#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "enumseq/asympk.hpp"
#include "enumseq/integer.hpp"

namespace enumseq {

// On-disk sequence files are plain ASCII text: an optional comment header
// `# seq=<id> version=<v> count=<N>` followed by one `index value` pair per
// line, LF-terminated. Values are decimal strings so the artifacts stay
// human-auditable, and integer files round-trip bit-identically.

inline constexpr const char* kSequenceFormatVersion = "1";

struct SequenceHeader {
    std::string sequence_id;
    std::string version = kSequenceFormatVersion;
    long count = -1;  // -1 when the header (or the count field) is absent
};

struct IntegerSequenceFile {
    SequenceHeader header;
    long start = 0;
    std::vector<Integer> values;
};

// Location of a named sequence cache inside a cache directory.
std::filesystem::path sequence_cache_path(const std::filesystem::path& directory,
                                          const std::string& sequence_id);

void write_integer_sequence(const std::filesystem::path& path, const IntegerSequenceFile& file);

// Throws std::runtime_error on missing file, malformed lines, non-contiguous
// indices, or a header count that disagrees with the number of records.
IntegerSequenceFile read_integer_sequence(const std::filesystem::path& path);

// Decimal-valued sequence files feed the extrapolation front end. Values may
// carry a fractional part and an exponent; they are parsed at the requested
// precision. Indices must be contiguous; the first index becomes the start.
DecimalSequence read_decimal_sequence(const std::filesystem::path& path, int precision);

void write_decimal_sequence(const std::filesystem::path& path, const DecimalSequence& sequence,
                            const std::string& sequence_id);

}  // namespace enumseq
