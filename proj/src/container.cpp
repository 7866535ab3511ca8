#include "lobgen/container.hpp"

#include <zlib.h>

#include <cstring>
#include <filesystem>

namespace lobgen {

namespace {

void put_u16_le(uint8_t* dst, uint16_t v) {
    dst[0] = static_cast<uint8_t>(v);
    dst[1] = static_cast<uint8_t>(v >> 8);
}
void put_u64_le(uint8_t* dst, uint64_t v) {
    for (int i = 0; i < 8; ++i) dst[i] = static_cast<uint8_t>(v >> (8 * i));
}
uint16_t get_u16_le(const uint8_t* src) {
    return static_cast<uint16_t>(src[0] | (src[1] << 8));
}
uint64_t get_u64_le(const uint8_t* src) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(src[i]) << (8 * i);
    return v;
}

std::array<uint8_t, kLobbHeaderSize> encode_header(uint64_t count) {
    std::array<uint8_t, kLobbHeaderSize> h{};
    std::memcpy(h.data(), kLobbMagic, 8);
    put_u16_le(h.data() + 8, kLobbVersion);
    put_u16_le(h.data() + 10, 0);
    put_u64_le(h.data() + 12, count);
    return h;
}

PackedFileHeader parse_header(const uint8_t* data, size_t n, const std::string& path) {
    if (n < kLobbHeaderSize || std::memcmp(data, kLobbMagic, 8) != 0)
        throw BadMagic("not a .lobb file: " + path);
    PackedFileHeader h;
    h.version = get_u16_le(data + 8);
    h.reserved = get_u16_le(data + 10);
    h.event_count = get_u64_le(data + 12);
    if (h.version != kLobbVersion)
        throw VersionUnsupported("unsupported .lobb version " + std::to_string(h.version) +
                                 " in " + path);
    return h;
}

std::vector<uint8_t> gzip_deflate(const std::vector<uint8_t>& in) {
    z_stream zs{};
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                     Z_DEFAULT_STRATEGY) != Z_OK)
        throw IoFailure("deflateInit2 failed");
    std::vector<uint8_t> out(deflateBound(&zs, in.size()));
    zs.next_in = const_cast<Bytef*>(in.data());
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) throw IoFailure("gzip compression failed");
    out.resize(out.size() - zs.avail_out);
    return out;
}

std::vector<uint8_t> gzip_inflate(const std::vector<uint8_t>& in) {
    z_stream zs{};
    if (inflateInit2(&zs, 15 + 16) != Z_OK) throw IoFailure("inflateInit2 failed");
    std::vector<uint8_t> out;
    out.reserve(in.size() * 4);
    zs.next_in = const_cast<Bytef*>(in.data());
    zs.avail_in = static_cast<uInt>(in.size());
    uint8_t chunk[1 << 16];
    int rc = Z_OK;
    do {
        zs.next_out = chunk;
        zs.avail_out = sizeof(chunk);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw IoFailure("gzip decompression failed");
        }
        out.insert(out.end(), chunk, chunk + (sizeof(chunk) - zs.avail_out));
    } while (rc != Z_STREAM_END);
    inflateEnd(&zs);
    return out;
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open: " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    return data;
}

}  // namespace

bool is_gz_path(const std::string& path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

PackedFileHeader write_packed_bytes(const std::string& path,
                                    const std::vector<uint8_t>& payload) {
    if (payload.size() % kPackedEventSize != 0)
        throw IoFailure("payload not a multiple of 32 bytes");
    const uint64_t count = payload.size() / kPackedEventSize;
    const auto header = encode_header(count);

    std::vector<uint8_t> file;
    file.reserve(kLobbHeaderSize + payload.size());
    file.insert(file.end(), header.begin(), header.end());
    file.insert(file.end(), payload.begin(), payload.end());
    if (is_gz_path(path)) file = gzip_deflate(file);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open for write: " + path);
    out.write(reinterpret_cast<const char*>(file.data()),
              static_cast<std::streamsize>(file.size()));
    if (!out) throw IoFailure("write failed: " + path);

    PackedFileHeader h;
    h.event_count = count;
    return h;
}

PackedFileHeader write_packed_file(const std::string& path,
                                   const std::vector<PackedEvent>& events) {
    std::vector<uint8_t> payload;
    payload.reserve(events.size() * kPackedEventSize);
    for (const PackedEvent& e : events) {
        const auto b = encode_packed(e);
        payload.insert(payload.end(), b.begin(), b.end());
    }
    return write_packed_bytes(path, payload);
}

PackedFileWriter::PackedFileWriter(const std::string& path) : path_(path) {
    if (is_gz_path(path))
        throw IoFailure("streaming writer does not support .gz: " + path);
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoFailure("cannot open for write: " + path);
    const auto header = encode_header(0);
    out_.write(reinterpret_cast<const char*>(header.data()), kLobbHeaderSize);
}

PackedFileWriter::~PackedFileWriter() {
    if (!closed_) {
        try {
            close();
        } catch (...) {
        }
    }
}

void PackedFileWriter::add(const PackedEvent& e) {
    const auto b = encode_packed(e);
    out_.write(reinterpret_cast<const char*>(b.data()), kPackedEventSize);
    ++count_;
}

PackedFileHeader PackedFileWriter::close() {
    closed_ = true;
    const auto header = encode_header(count_);
    out_.seekp(0);
    out_.write(reinterpret_cast<const char*>(header.data()), kLobbHeaderSize);
    out_.close();
    if (!out_) throw IoFailure("write failed: " + path_);
    PackedFileHeader h;
    h.event_count = count_;
    return h;
}

PackedFileReader::PackedFileReader(const std::string& path) {
    if (is_gz_path(path)) {
        buffer_ = gzip_inflate(read_file_bytes(path));
        header_ = parse_header(buffer_.data(), buffer_.size(), path);
        const size_t payload = buffer_.size() - kLobbHeaderSize;
        if (payload != header_.event_count * kPackedEventSize)
            throw TruncatedPayload("payload size mismatch in " + path);
        buffer_pos_ = kLobbHeaderSize;
    } else {
        in_.open(path, std::ios::binary);
        if (!in_) throw IoFailure("cannot open: " + path);
        uint8_t hdr[kLobbHeaderSize];
        in_.read(reinterpret_cast<char*>(hdr), kLobbHeaderSize);
        if (in_.gcount() != kLobbHeaderSize) throw BadMagic("file too short: " + path);
        header_ = parse_header(hdr, kLobbHeaderSize, path);
        const auto fsize = std::filesystem::file_size(path);
        if (fsize != kLobbHeaderSize + header_.event_count * kPackedEventSize)
            throw TruncatedPayload("payload size mismatch in " + path);
    }
    remaining_ = header_.event_count;
}

bool PackedFileReader::next(PackedEvent& out) {
    if (remaining_ == 0) return false;
    uint8_t rec[kPackedEventSize];
    if (!buffer_.empty()) {
        std::memcpy(rec, buffer_.data() + buffer_pos_, kPackedEventSize);
        buffer_pos_ += kPackedEventSize;
    } else {
        in_.read(reinterpret_cast<char*>(rec), kPackedEventSize);
        if (in_.gcount() != kPackedEventSize) throw TruncatedPayload("short read");
    }
    out = decode_packed(std::span<const uint8_t>(rec, kPackedEventSize));
    --remaining_;
    return true;
}

std::vector<PackedEvent> PackedFileReader::read_all() {
    std::vector<PackedEvent> events;
    events.reserve(remaining_);
    PackedEvent e;
    while (next(e)) events.push_back(e);
    return events;
}

std::pair<PackedFileHeader, std::vector<PackedEvent>> read_packed_file(const std::string& path) {
    PackedFileReader reader(path);
    return {reader.header(), reader.read_all()};
}

EventStream load_stream(const std::string& path) {
    EventStream s;
    s.events = PackedFileReader(path).read_all();
    s.source = path;
    return s;
}

PackedFileHeader save_stream(const std::string& path, const EventStream& stream) {
    return write_packed_file(path, stream.events);
}

std::vector<uint8_t> read_packed_payload(const std::string& path) {
    if (is_gz_path(path)) {
        auto all = gzip_inflate(read_file_bytes(path));
        parse_header(all.data(), all.size(), path);
        return std::vector<uint8_t>(all.begin() + kLobbHeaderSize, all.end());
    }
    auto all = read_file_bytes(path);
    const auto header = parse_header(all.data(), all.size(), path);
    if (all.size() - kLobbHeaderSize != header.event_count * kPackedEventSize)
        throw TruncatedPayload("payload size mismatch in " + path);
    return std::vector<uint8_t>(all.begin() + kLobbHeaderSize, all.end());
}

std::vector<uint8_t> stream_to_bytes(const EventStream& stream) {
    std::vector<uint8_t> out;
    out.reserve(stream.events.size() * kPackedEventSize);
    for (const PackedEvent& e : stream.events) {
        const auto b = encode_packed(e);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

}  // namespace lobgen
