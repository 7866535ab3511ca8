#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "lobgen/event.hpp"

namespace lobgen {

// .lobb container: fixed 20-byte header, then event_count * 32 bytes of
// packed events. Header fields are little-endian:
//
//   Bytes  0-7 : magic "LOBBYTE1"
//   Bytes  8-9 : version (u16), currently 1
//   Bytes 10-11: reserved (u16), written zero
//   Bytes 12-19: event_count (u64)
//
// A ".gz" suffix selects a gzip-wrapped container (whole-file compression).
// Compressed files cannot back the training sampler, which needs O(1)
// random access to aligned offsets.

inline constexpr char kLobbMagic[8] = {'L', 'O', 'B', 'B', 'Y', 'T', 'E', '1'};
inline constexpr uint16_t kLobbVersion = 1;
inline constexpr size_t kLobbHeaderSize = 20;

struct PackedFileHeader {
    uint16_t version = kLobbVersion;
    uint16_t reserved = 0;
    uint64_t event_count = 0;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadMagic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VersionUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncatedPayload : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_gz_path(const std::string& path);

// One-shot writers/readers. Identical input produces byte-identical files.
PackedFileHeader write_packed_file(const std::string& path,
                                   const std::vector<PackedEvent>& events);
PackedFileHeader write_packed_bytes(const std::string& path,
                                    const std::vector<uint8_t>& payload);

// Streaming writer for conversion pipelines; patches event_count on close.
// Only uncompressed output (gzip needs the whole buffer; use
// write_packed_file for .gz).
class PackedFileWriter {
public:
    explicit PackedFileWriter(const std::string& path);
    ~PackedFileWriter();
    void add(const PackedEvent& e);
    PackedFileHeader close();

private:
    std::ofstream out_;
    std::string path_;
    uint64_t count_ = 0;
    bool closed_ = false;
};

// Streaming reader; header validated on open, events decoded on demand.
class PackedFileReader {
public:
    explicit PackedFileReader(const std::string& path);
    const PackedFileHeader& header() const { return header_; }
    bool next(PackedEvent& out);
    std::vector<PackedEvent> read_all();

private:
    std::ifstream in_;
    std::vector<uint8_t> buffer_;  // populated for gz inputs
    size_t buffer_pos_ = 0;
    PackedFileHeader header_;
    uint64_t remaining_ = 0;
};

std::pair<PackedFileHeader, std::vector<PackedEvent>> read_packed_file(const std::string& path);

EventStream load_stream(const std::string& path);
PackedFileHeader save_stream(const std::string& path, const EventStream& stream);

// Raw payload bytes (no header), for byte-level consumers like the sampler.
std::vector<uint8_t> read_packed_payload(const std::string& path);

std::vector<uint8_t> stream_to_bytes(const EventStream& stream);

}  // namespace lobgen
