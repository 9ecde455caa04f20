#include "enumseq/seqio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace enumseq {

namespace {

[[noreturn]] void file_error(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

SequenceHeader parse_header(const std::string& line) {
    SequenceHeader header;
    std::istringstream tokens(line.substr(1));
    std::string token;
    while (tokens >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "seq") {
            header.sequence_id = value;
        } else if (key == "version") {
            header.version = value;
        } else if (key == "count") {
            header.count = std::stol(value);
        }
    }
    return header;
}

// Reads the shared line format and hands each `index value` pair to the
// caller. Returns the header (default-constructed if the file has none).
template <typename Record>
SequenceHeader read_lines(const std::filesystem::path& path, Record&& record) {
    std::ifstream in(path);
    if (!in) file_error(path, "cannot open for reading");
    SequenceHeader header;
    std::string line;
    long line_number = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!saw_data) header = parse_header(line);
            continue;
        }
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        if (!(fields >> index >> value)) {
            file_error(path, "malformed record on line " + std::to_string(line_number));
        }
        record(index, value, line_number);
        saw_data = true;
    }
    return header;
}

void check_count(const std::filesystem::path& path, const SequenceHeader& header,
                 std::size_t records) {
    if (header.count >= 0 && static_cast<std::size_t>(header.count) != records) {
        file_error(path, "header count " + std::to_string(header.count) + " but " +
                             std::to_string(records) + " records");
    }
}

void write_header(std::ofstream& out, const std::string& sequence_id, std::size_t count) {
    out << "# seq=" << sequence_id << " version=" << kSequenceFormatVersion
        << " count=" << count << "\n";
}

}  // namespace

std::filesystem::path sequence_cache_path(const std::filesystem::path& directory,
                                          const std::string& sequence_id) {
    return directory / (sequence_id + ".seq");
}

void write_integer_sequence(const std::filesystem::path& path, const IntegerSequenceFile& file) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) file_error(path, "cannot open for writing");
    write_header(out, file.header.sequence_id, file.values.size());
    for (std::size_t i = 0; i < file.values.size(); ++i) {
        out << file.start + static_cast<long>(i) << " " << to_string(file.values[i]) << "\n";
    }
    if (!out) file_error(path, "write failed");
}

IntegerSequenceFile read_integer_sequence(const std::filesystem::path& path) {
    IntegerSequenceFile file;
    bool first = true;
    file.header = read_lines(path, [&](long index, const std::string& value, long line_number) {
        if (first) {
            file.start = index;
            first = false;
        } else if (index != file.start + static_cast<long>(file.values.size())) {
            file_error(path, "non-contiguous index on line " + std::to_string(line_number));
        }
        file.values.push_back(integer_from_string(value));
    });
    check_count(path, file.header, file.values.size());
    return file;
}

DecimalSequence read_decimal_sequence(const std::filesystem::path& path, int precision) {
    DecimalSequence sequence;
    bool first = true;
    SequenceHeader header =
        read_lines(path, [&](long index, const std::string& value, long line_number) {
            if (first) {
                sequence.start = index;
                first = false;
            } else if (index != sequence.start + static_cast<long>(sequence.values.size())) {
                file_error(path, "non-contiguous index on line " + std::to_string(line_number));
            }
            sequence.values.push_back(BigDecimal::from_string(value, precision));
        });
    check_count(path, header, sequence.values.size());
    if (sequence.values.empty()) file_error(path, "no records");
    return sequence;
}

void write_decimal_sequence(const std::filesystem::path& path, const DecimalSequence& sequence,
                            const std::string& sequence_id) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) file_error(path, "cannot open for writing");
    write_header(out, sequence_id, sequence.values.size());
    for (std::size_t i = 0; i < sequence.values.size(); ++i) {
        out << sequence.start + static_cast<long>(i) << " " << sequence.values[i].to_string()
            << "\n";
    }
    if (!out) file_error(path, "write failed");
}

}  // namespace enumseq
