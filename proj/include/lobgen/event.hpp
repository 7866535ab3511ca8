#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lobgen/common.hpp"

namespace lobgen {

// 32-byte packed market event wire format (see docs/FORMAT.md).
//
//   Bytes  0-7 : ev_packed (uint64) = (order_id << 32) | ev
//   Bytes  8-15: exch_ts   (int64, nanoseconds since epoch)
//   Bytes 16-23: price     (float64)
//   Bytes 24-31: quantity  (float64)
//
// All fields little-endian. The low 8 bits of the ev word carry the event
// type; bits 28-31 carry flags; bits 8-27 are reserved (written zero,
// ignored on read).

inline constexpr size_t kPackedEventSize = 32;

struct EventType {
    uint8_t code = 0;

    static constexpr uint8_t kAdd = 10;
    static constexpr uint8_t kCancel = 11;
    static constexpr uint8_t kModify = 12;
    static constexpr uint8_t kFill = 13;

    static EventType add() { return {kAdd}; }
    static EventType cancel() { return {kCancel}; }
    static EventType modify() { return {kModify}; }
    static EventType fill() { return {kFill}; }
    static EventType other(uint8_t c) { return {c}; }

    bool known() const {
        return code == kAdd || code == kCancel || code == kModify || code == kFill;
    }
    std::string name() const;

    bool operator==(const EventType&) const = default;
};

struct EventFlags {
    bool exch = false;   // bit 31, 0x80000000
    bool local = false;  // bit 30, 0x40000000
    bool buy = false;    // bit 29, 0x20000000
    bool sell = false;   // bit 28, 0x10000000

    static constexpr uint32_t kExch = 0x80000000u;
    static constexpr uint32_t kLocal = 0x40000000u;
    static constexpr uint32_t kBuy = 0x20000000u;
    static constexpr uint32_t kSell = 0x10000000u;

    uint32_t word() const {
        return (exch ? kExch : 0) | (local ? kLocal : 0) | (buy ? kBuy : 0) |
               (sell ? kSell : 0);
    }
    static EventFlags from_word(uint32_t ev) {
        return {(ev & kExch) != 0, (ev & kLocal) != 0, (ev & kBuy) != 0,
                (ev & kSell) != 0};
    }

    bool operator==(const EventFlags&) const = default;
};

struct PackedEvent {
    uint64_t ev_packed = 0;
    int64_t exch_ts = 0;
    double price = 0.0;
    double quantity = 0.0;
};

struct DecodedEvent {
    uint32_t order_id = 0;
    EventType event_type;
    EventFlags flags;
    int64_t exch_ts = 0;
    double price = 0.0;
    double quantity = 0.0;

    // Bitwise on the float fields so round-trip equality holds for NaN too.
    bool operator==(const DecodedEvent& o) const {
        return order_id == o.order_id && event_type == o.event_type &&
               flags == o.flags && exch_ts == o.exch_ts &&
               bits_equal(price, o.price) && bits_equal(quantity, o.quantity);
    }
};

struct WrongLength : std::runtime_error {
    explicit WrongLength(size_t got)
        : std::runtime_error("decode_event: expected 32 bytes, got " + std::to_string(got)) {}
};

uint64_t pack_ev(uint32_t order_id, EventType type, EventFlags flags);

struct UnpackedEv {
    uint32_t order_id;
    EventType event_type;
    EventFlags flags;
};
UnpackedEv unpack_ev(uint64_t ev_packed);

PackedEvent pack_event(const DecodedEvent& e);
DecodedEvent unpack_event(const PackedEvent& p);

std::array<uint8_t, kPackedEventSize> encode_event(const DecodedEvent& e);
std::array<uint8_t, kPackedEventSize> encode_packed(const PackedEvent& p);
DecodedEvent decode_event(std::span<const uint8_t> bytes);
PackedEvent decode_packed(std::span<const uint8_t> bytes);

// Validity rules reported by validate_event. Decoding never rejects; these
// are advisory flags the pipeline counts or filters on.
struct ValidityReport {
    bool zero_or_negative_price = false;
    bool nonfinite_price = false;
    bool zero_or_negative_quantity = false;
    bool nonfinite_quantity = false;
    bool unknown_event_type = false;
    bool conflicting_side = false;
    bool negative_timestamp = false;

    bool ok() const {
        return !(zero_or_negative_price || nonfinite_price ||
                 zero_or_negative_quantity || nonfinite_quantity ||
                 unknown_event_type || conflicting_side || negative_timestamp);
    }
    std::string describe() const;
};

ValidityReport validate_event(const DecodedEvent& e);

// Ordered event sequence plus provenance, the unit of ingestion, generation
// and evaluation.
struct EventStream {
    std::vector<PackedEvent> events;
    std::string source;
};

}  // namespace lobgen
