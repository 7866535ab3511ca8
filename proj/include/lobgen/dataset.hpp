#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lobgen/common.hpp"

namespace lobgen {

// Sequence sampler over a packed payload. Offsets and lengths are multiples
// of the 32-byte event width, so every sample decodes into whole events.
struct SamplerConfig {
    size_t min_len_bytes = 3200;
    size_t max_len_bytes = 10240;
    size_t alignment = 32;
    uint64_t seed = 0;

    void validate() const;
};

struct SequenceSample {
    std::vector<uint8_t> bytes;
    size_t source_offset = 0;  // byte offset within the payload
    size_t event_count = 0;    // bytes.size() / 32
};

struct RaggedBatch {
    std::vector<std::vector<uint8_t>> inputs;   // sample[:-1]
    std::vector<std::vector<uint8_t>> targets;  // sample[1:]
    std::vector<size_t> lengths;                // per-pair length, sample_len - 1

    size_t size() const { return inputs.size(); }
    size_t total_bytes() const;
};

struct FileTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyBatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SequenceSampler {
public:
    // Payload is the raw event bytes of a .lobb file (no header).
    SequenceSampler(std::vector<uint8_t> payload, const SamplerConfig& cfg);
    static SequenceSampler from_file(const std::string& path, const SamplerConfig& cfg);

    SequenceSample sample();
    std::vector<SequenceSample> sample_n(size_t n);

    const SamplerConfig& config() const { return cfg_; }
    size_t payload_size() const { return payload_.size(); }

    // Exact sampler state, for bitwise-reproducible training resume.
    std::string save_rng_state() const { return rng_.save_state(); }
    void load_rng_state(const std::string& s) { rng_.load_state(s); }

private:
    std::vector<uint8_t> payload_;
    SamplerConfig cfg_;
    Rng rng_;
};

std::pair<std::vector<uint8_t>, std::vector<uint8_t>> make_pair(const SequenceSample& s);

RaggedBatch build_batch(const std::vector<SequenceSample>& samples);

}  // namespace lobgen
