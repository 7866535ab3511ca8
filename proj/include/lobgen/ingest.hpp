#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lobgen/common.hpp"
#include "lobgen/event.hpp"

namespace lobgen {

// Raw Market-By-Order row, the six fields the conversion consumes. Extra
// source columns are ignored at parse time.
struct MboRecord {
    int64_t ts_event = 0;
    char action = 0;
    char side = 0;
    double price = 0.0;
    double size = 0.0;
    uint64_t order_id = 0;
};

struct MalformedRow : std::runtime_error {
    size_t row_index;
    MalformedRow(size_t row, const std::string& why)
        : std::runtime_error("row " + std::to_string(row) + ": " + why), row_index(row) {}
};

// Column positions of the six named fields in a delimited text file.
struct MboSchema {
    char delimiter = ',';
    int ts_event = -1;
    int action = -1;
    int side = -1;
    int price = -1;
    int size = -1;
    int order_id = -1;

    // Resolve the schema from a header row. Throws MalformedRow(0) when a
    // required column is missing.
    static MboSchema from_header(const std::string& header, char delimiter = ',');
};

MboRecord parse_mbo_row(const std::string& row, const MboSchema& schema, size_t row_index);

struct ConversionStats {
    uint64_t total_rows = 0;
    uint64_t emitted = 0;
    uint64_t dropped_zero_price = 0;
    uint64_t dropped_zero_qty = 0;
    uint64_t dropped_unknown_action = 0;
    uint64_t dropped_oversize_order_id = 0;

    uint64_t dropped() const {
        return dropped_zero_price + dropped_zero_qty + dropped_unknown_action +
               dropped_oversize_order_id;
    }
    bool balanced() const { return total_rows == emitted + dropped(); }
};

// One-record conversion step. Drop precedence when several rules match:
// unknown action, then oversize order id, then zero price, then zero qty.
std::optional<PackedEvent> convert_record(const MboRecord& r, ConversionStats& stats);

std::pair<std::vector<PackedEvent>, ConversionStats> convert_records(
    const std::vector<MboRecord>& records);

// Synthetic desk-scale corpus generator. Arrivals follow a self-exciting
// process: intensity jumps by burstiness*decay at each event and relaxes
// exponentially back to base_rate, so burstiness = 0 is a plain Poisson
// stream. Types are drawn from the configured fractions against a live-order
// pool so cancels, modifies and fills reference real resting orders.
struct SyntheticConfig {
    uint64_t seed = 0;
    double duration = 60.0;        // seconds
    double base_rate = 100.0;      // events/second
    double burstiness = 0.0;       // self-excitation factor in [0,1)
    double decay = 1.0;            // 1/seconds
    double mid_price0 = 87500.0;   // quote currency
    double tick_size = 0.25;       // quote currency
    double cancel_fraction = 0.25;
    double modify_fraction = 0.25;
    double fill_fraction = 0.05;   // add_fraction is the remainder
    double size_tail_alpha = 1.5;  // power-law tail exponent for order sizes
    uint64_t target_events = 0;    // when nonzero, stop at exactly this count

    double add_fraction() const {
        return 1.0 - cancel_fraction - modify_fraction - fill_fraction;
    }
    void validate() const;  // throws InvalidConfig

    // Fractions matching the event-type mix of a liquid futures book
    // (modify-heavy, fills rare).
    static SyntheticConfig futures_mix_preset();
};

struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EventStream synth_generate(const SyntheticConfig& cfg);

}  // namespace lobgen
