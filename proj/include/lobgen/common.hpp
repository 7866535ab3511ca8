#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lobgen {

// Deterministic RNG used everywhere. Distributions are implemented by hand
// (not std::*_distribution) so the same seed produces the same byte streams
// on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling keeps the draw exactly uniform.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // Exponential with rate lambda.
    double exponential(double lambda) {
        return -std::log(1.0 - uniform01()) / lambda;
    }

    // Standard normal, Box-Muller without cached spare (keeps state minimal).
    double normal() {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Pareto with minimum 1 and tail exponent alpha.
    double pareto(double alpha) {
        return std::pow(1.0 - uniform01(), -1.0 / alpha);
    }

    // Exact engine state, for bitwise-reproducible checkpoint resume.
    std::string save_state() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }
    void load_state(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
        if (!is) throw std::runtime_error("Rng: bad serialized state");
    }

private:
    std::mt19937_64 engine_;
};

// FNV-1a, used for artifact checksums in run manifests and tests.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a_file_hex(const std::string& path);

// Plain key=value config files ('#' starts a comment, blank lines ignored).
class KvConfig {
public:
    KvConfig() = default;
    static KvConfig from_file(const std::string& path);
    static KvConfig from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    std::string get_str(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    int64_t get_int(const std::string& key, int64_t def) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

// Bitwise double equality (NaN-safe); round-trip contracts are bit-exact.
bool bits_equal(double a, double b);

std::string to_hex(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> from_hex(std::string_view hex);

}  // namespace lobgen
