#include "lobgen/event.hpp"

#include <bit>
#include <cmath>

namespace lobgen {

std::string EventType::name() const {
    switch (code) {
        case kAdd: return "ADD";
        case kCancel: return "CANCEL";
        case kModify: return "MODIFY";
        case kFill: return "FILL";
        default: return "OTHER(" + std::to_string(int(code)) + ")";
    }
}

uint64_t pack_ev(uint32_t order_id, EventType type, EventFlags flags) {
    const uint32_t ev = flags.word() | type.code;
    return (static_cast<uint64_t>(order_id) << 32) | ev;
}

UnpackedEv unpack_ev(uint64_t ev_packed) {
    const uint32_t ev = static_cast<uint32_t>(ev_packed & 0xFFFFFFFFu);
    UnpackedEv out;
    out.order_id = static_cast<uint32_t>(ev_packed >> 32);
    out.event_type = EventType{static_cast<uint8_t>(ev & 0xFFu)};
    out.flags = EventFlags::from_word(ev);
    return out;
}

PackedEvent pack_event(const DecodedEvent& e) {
    return {pack_ev(e.order_id, e.event_type, e.flags), e.exch_ts, e.price, e.quantity};
}

DecodedEvent unpack_event(const PackedEvent& p) {
    const UnpackedEv u = unpack_ev(p.ev_packed);
    return {u.order_id, u.event_type, u.flags, p.exch_ts, p.price, p.quantity};
}

namespace {

void put_u64_le(uint8_t* dst, uint64_t v) {
    for (int i = 0; i < 8; ++i) dst[i] = static_cast<uint8_t>(v >> (8 * i));
}

uint64_t get_u64_le(const uint8_t* src) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(src[i]) << (8 * i);
    return v;
}

}  // namespace

std::array<uint8_t, kPackedEventSize> encode_packed(const PackedEvent& p) {
    std::array<uint8_t, kPackedEventSize> out;
    put_u64_le(out.data() + 0, p.ev_packed);
    put_u64_le(out.data() + 8, std::bit_cast<uint64_t>(p.exch_ts));
    put_u64_le(out.data() + 16, std::bit_cast<uint64_t>(p.price));
    put_u64_le(out.data() + 24, std::bit_cast<uint64_t>(p.quantity));
    return out;
}

std::array<uint8_t, kPackedEventSize> encode_event(const DecodedEvent& e) {
    return encode_packed(pack_event(e));
}

PackedEvent decode_packed(std::span<const uint8_t> bytes) {
    if (bytes.size() != kPackedEventSize) throw WrongLength(bytes.size());
    PackedEvent p;
    p.ev_packed = get_u64_le(bytes.data() + 0);
    p.exch_ts = std::bit_cast<int64_t>(get_u64_le(bytes.data() + 8));
    p.price = std::bit_cast<double>(get_u64_le(bytes.data() + 16));
    p.quantity = std::bit_cast<double>(get_u64_le(bytes.data() + 24));
    return p;
}

DecodedEvent decode_event(std::span<const uint8_t> bytes) {
    return unpack_event(decode_packed(bytes));
}

ValidityReport validate_event(const DecodedEvent& e) {
    ValidityReport r;
    if (!std::isfinite(e.price)) r.nonfinite_price = true;
    else if (e.price <= 0.0) r.zero_or_negative_price = true;
    if (!std::isfinite(e.quantity)) r.nonfinite_quantity = true;
    else if (e.quantity <= 0.0) r.zero_or_negative_quantity = true;
    if (!e.event_type.known()) r.unknown_event_type = true;
    if (e.flags.buy && e.flags.sell) r.conflicting_side = true;
    if (e.exch_ts < 0) r.negative_timestamp = true;
    return r;
}

std::string ValidityReport::describe() const {
    std::string s;
    auto add = [&s](const char* name) {
        if (!s.empty()) s += ",";
        s += name;
    };
    if (zero_or_negative_price) add("zero_or_negative_price");
    if (nonfinite_price) add("nonfinite_price");
    if (zero_or_negative_quantity) add("zero_or_negative_quantity");
    if (nonfinite_quantity) add("nonfinite_quantity");
    if (unknown_event_type) add("unknown_event_type");
    if (conflicting_side) add("conflicting_side");
    if (negative_timestamp) add("negative_timestamp");
    return s.empty() ? "ok" : s;
}

}  // namespace lobgen
