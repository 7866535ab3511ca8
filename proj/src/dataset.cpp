#include "lobgen/dataset.hpp"

#include <algorithm>

#include "lobgen/container.hpp"

namespace lobgen {

void SamplerConfig::validate() const {
    if (alignment == 0) throw std::invalid_argument("alignment must be positive");
    if (min_len_bytes % alignment != 0 || max_len_bytes % alignment != 0)
        throw std::invalid_argument("sampler lengths must be multiples of the alignment");
    if (min_len_bytes == 0 || min_len_bytes > max_len_bytes)
        throw std::invalid_argument("need 0 < min_len_bytes <= max_len_bytes");
}

SequenceSampler::SequenceSampler(std::vector<uint8_t> payload, const SamplerConfig& cfg)
    : payload_(std::move(payload)), cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    if (payload_.size() % cfg_.alignment != 0)
        throw std::invalid_argument("payload is not aligned to the event width");
    if (payload_.size() < cfg_.min_len_bytes)
        throw FileTooSmall("payload of " + std::to_string(payload_.size()) +
                           " bytes is smaller than min_len_bytes");
}

SequenceSampler SequenceSampler::from_file(const std::string& path, const SamplerConfig& cfg) {
    return SequenceSampler(read_packed_payload(path), cfg);
}

SequenceSample SequenceSampler::sample() {
    const size_t align = cfg_.alignment;
    // Every offset that can start a minimum-length sample is drawn uniformly;
    // lengths past end-of-file are clipped down, never below min_len.
    const uint64_t offset_slots = (payload_.size() - cfg_.min_len_bytes) / align + 1;
    const uint64_t len_slots = (cfg_.max_len_bytes - cfg_.min_len_bytes) / align + 1;

    const size_t offset = static_cast<size_t>(rng_.below(offset_slots)) * align;
    size_t len = cfg_.min_len_bytes + static_cast<size_t>(rng_.below(len_slots)) * align;
    len = std::min(len, payload_.size() - offset);

    SequenceSample s;
    s.source_offset = offset;
    s.event_count = len / align;
    s.bytes.assign(payload_.begin() + offset, payload_.begin() + offset + len);
    return s;
}

std::vector<SequenceSample> SequenceSampler::sample_n(size_t n) {
    std::vector<SequenceSample> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(sample());
    return out;
}

std::pair<std::vector<uint8_t>, std::vector<uint8_t>> make_pair(const SequenceSample& s) {
    if (s.bytes.empty()) throw std::invalid_argument("make_pair: empty sample");
    std::vector<uint8_t> input(s.bytes.begin(), s.bytes.end() - 1);
    std::vector<uint8_t> target(s.bytes.begin() + 1, s.bytes.end());
    return {std::move(input), std::move(target)};
}

size_t RaggedBatch::total_bytes() const {
    size_t n = 0;
    for (size_t len : lengths) n += len;
    return n;
}

RaggedBatch build_batch(const std::vector<SequenceSample>& samples) {
    if (samples.empty()) throw EmptyBatch("build_batch: no samples");
    RaggedBatch b;
    b.inputs.reserve(samples.size());
    b.targets.reserve(samples.size());
    b.lengths.reserve(samples.size());
    for (const SequenceSample& s : samples) {
        auto [in, tgt] = make_pair(s);
        b.lengths.push_back(in.size());
        b.inputs.push_back(std::move(in));
        b.targets.push_back(std::move(tgt));
    }
    return b;
}

}  // namespace lobgen
