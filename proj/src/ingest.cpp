#include "lobgen/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace lobgen {

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(delim, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    if (!out.empty() && !out.back().empty() && out.back().back() == '\r')
        out.back().pop_back();
    return out;
}

}  // namespace

MboSchema MboSchema::from_header(const std::string& header, char delimiter) {
    const auto cols = split(header, delimiter);
    MboSchema s;
    s.delimiter = delimiter;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] == "ts_event") s.ts_event = static_cast<int>(i);
        else if (cols[i] == "action") s.action = static_cast<int>(i);
        else if (cols[i] == "side") s.side = static_cast<int>(i);
        else if (cols[i] == "price") s.price = static_cast<int>(i);
        else if (cols[i] == "size") s.size = static_cast<int>(i);
        else if (cols[i] == "order_id") s.order_id = static_cast<int>(i);
    }
    auto require = [](int idx, const char* name) {
        if (idx < 0) throw MalformedRow(0, std::string("missing column: ") + name);
    };
    require(s.ts_event, "ts_event");
    require(s.action, "action");
    require(s.side, "side");
    require(s.price, "price");
    require(s.size, "size");
    require(s.order_id, "order_id");
    return s;
}

MboRecord parse_mbo_row(const std::string& row, const MboSchema& schema, size_t row_index) {
    const auto fields = split(row, schema.delimiter);
    const int needed = std::max({schema.ts_event, schema.action, schema.side,
                                 schema.price, schema.size, schema.order_id});
    if (static_cast<int>(fields.size()) <= needed)
        throw MalformedRow(row_index, "expected at least " + std::to_string(needed + 1) +
                                          " fields, got " + std::to_string(fields.size()));

    auto field = [&](int idx) -> const std::string& { return fields[static_cast<size_t>(idx)]; };
    auto parse_i64 = [&](int idx, const char* name) {
        try {
            size_t pos = 0;
            const long long v = std::stoll(field(idx), &pos);
            if (pos != field(idx).size()) throw std::invalid_argument("trailing");
            return static_cast<int64_t>(v);
        } catch (const std::exception&) {
            throw MalformedRow(row_index, std::string("unparseable ") + name + ": '" + field(idx) + "'");
        }
    };
    auto parse_u64 = [&](int idx, const char* name) {
        try {
            size_t pos = 0;
            const unsigned long long v = std::stoull(field(idx), &pos);
            if (pos != field(idx).size()) throw std::invalid_argument("trailing");
            return static_cast<uint64_t>(v);
        } catch (const std::exception&) {
            throw MalformedRow(row_index, std::string("unparseable ") + name + ": '" + field(idx) + "'");
        }
    };
    auto parse_f64 = [&](int idx, const char* name) {
        try {
            size_t pos = 0;
            const double v = std::stod(field(idx), &pos);
            if (pos != field(idx).size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw MalformedRow(row_index, std::string("unparseable ") + name + ": '" + field(idx) + "'");
        }
    };
    auto parse_char = [&](int idx, const char* name) {
        if (field(idx).empty())
            throw MalformedRow(row_index, std::string("empty ") + name);
        return field(idx)[0];
    };

    MboRecord r;
    r.ts_event = parse_i64(schema.ts_event, "ts_event");
    r.action = parse_char(schema.action, "action");
    r.side = parse_char(schema.side, "side");
    r.price = parse_f64(schema.price, "price");
    r.size = parse_f64(schema.size, "size");
    r.order_id = parse_u64(schema.order_id, "order_id");
    return r;
}

std::optional<PackedEvent> convert_record(const MboRecord& r, ConversionStats& stats) {
    ++stats.total_rows;

    EventType type;
    switch (r.action) {
        case 'A': type = EventType::add(); break;
        case 'C': type = EventType::cancel(); break;
        case 'M': type = EventType::modify(); break;
        case 'F':
        case 'T': type = EventType::fill(); break;
        default:
            ++stats.dropped_unknown_action;
            return std::nullopt;
    }
    if (r.order_id > 0xFFFFFFFFull) {
        ++stats.dropped_oversize_order_id;
        return std::nullopt;
    }
    if (!std::isfinite(r.price) || r.price <= 0.0) {
        ++stats.dropped_zero_price;
        return std::nullopt;
    }
    if (!std::isfinite(r.size) || r.size <= 0.0) {
        ++stats.dropped_zero_qty;
        return std::nullopt;
    }

    EventFlags flags;
    flags.exch = true;
    if (r.side == 'B') flags.buy = true;
    else if (r.side == 'A') flags.sell = true;

    ++stats.emitted;
    PackedEvent e;
    e.ev_packed = pack_ev(static_cast<uint32_t>(r.order_id), type, flags);
    e.exch_ts = r.ts_event;
    e.price = r.price;
    e.quantity = r.size;
    return e;
}

std::pair<std::vector<PackedEvent>, ConversionStats> convert_records(
    const std::vector<MboRecord>& records) {
    std::vector<PackedEvent> out;
    out.reserve(records.size());
    ConversionStats stats;
    for (const MboRecord& r : records) {
        if (auto e = convert_record(r, stats)) out.push_back(*e);
    }
    return {std::move(out), stats};
}

void SyntheticConfig::validate() const {
    auto frac_ok = [](double f) { return f >= 0.0 && f <= 1.0; };
    if (!frac_ok(cancel_fraction) || !frac_ok(modify_fraction) || !frac_ok(fill_fraction) ||
        add_fraction() < -1e-12)
        throw InvalidConfig("event-type fractions must be in [0,1] and sum to at most 1");
    if (!(base_rate > 0.0)) throw InvalidConfig("base_rate must be > 0");
    if (!(decay > 0.0)) throw InvalidConfig("decay must be > 0");
    if (burstiness < 0.0 || burstiness >= 1.0) throw InvalidConfig("burstiness must be in [0,1)");
    if (!(tick_size > 0.0)) throw InvalidConfig("tick_size must be > 0");
    if (!(mid_price0 > 0.0)) throw InvalidConfig("mid_price0 must be > 0");
    if (!(size_tail_alpha > 0.0)) throw InvalidConfig("size_tail_alpha must be > 0");
    if (duration <= 0.0 && target_events == 0)
        throw InvalidConfig("need positive duration or a target event count");
}

SyntheticConfig SyntheticConfig::futures_mix_preset() {
    SyntheticConfig cfg;
    cfg.cancel_fraction = 0.313;
    cfg.modify_fraction = 0.368;
    cfg.fill_fraction = 0.002;
    cfg.burstiness = 0.7;
    cfg.decay = 2.0;
    return cfg;
}

namespace {

struct LiveOrder {
    uint32_t id;
    bool buy;
    double price;
    double qty;
};

// 2024-11-11T00:00:00Z; synthetic timestamps count up from here.
constexpr int64_t kSynthEpochNs = 1'731'283'200'000'000'000LL;

}  // namespace

EventStream synth_generate(const SyntheticConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);

    EventStream stream;
    stream.source = "synth:seed=" + std::to_string(cfg.seed);
    if (cfg.target_events > 0) stream.events.reserve(cfg.target_events);

    std::vector<LiveOrder> pool;
    double t = 0.0;       // seconds since epoch offset
    double excite = 0.0;  // sum of exp(-decay*(t - t_i)) over past events
    double mid = cfg.mid_price0;
    uint64_t next_id = 1;

    const double jump = cfg.burstiness * cfg.decay;

    while (true) {
        // Ogata thinning; intensity only decays between events, so the
        // current intensity is a valid upper bound.
        double lambda_cand;
        while (true) {
            const double lambda_bar = cfg.base_rate + jump * excite;
            const double w = rng.exponential(lambda_bar);
            excite *= std::exp(-cfg.decay * w);
            t += w;
            lambda_cand = cfg.base_rate + jump * excite;
            if (rng.uniform01() * lambda_bar <= lambda_cand) break;
        }
        excite += 1.0;

        if (cfg.target_events > 0) {
            if (stream.events.size() >= cfg.target_events) break;
        } else if (t >= cfg.duration) {
            break;
        }

        // Mid-price random walk at tick granularity. Coupling the move
        // probability to the instantaneous intensity makes bursty streams
        // volatility-clustered; at burstiness 0 moves are i.i.d.
        const double p_move = std::min(0.6, 0.12 * lambda_cand / cfg.base_rate);
        if (rng.uniform01() < p_move) {
            const double steps = 1.0 + std::floor(rng.exponential(1.2));
            mid += (rng.uniform01() < 0.5 ? -1.0 : 1.0) * steps * cfg.tick_size;
            if (mid < cfg.tick_size) mid = 2.0 * cfg.tick_size - mid;
        }

        // Event type; cancel/modify/fill fall back to add while no orders rest.
        const double u = rng.uniform01();
        uint8_t code;
        if (u < cfg.add_fraction()) code = EventType::kAdd;
        else if (u < cfg.add_fraction() + cfg.cancel_fraction) code = EventType::kCancel;
        else if (u < cfg.add_fraction() + cfg.cancel_fraction + cfg.modify_fraction)
            code = EventType::kModify;
        else code = EventType::kFill;
        if (pool.empty() && code != EventType::kAdd) code = EventType::kAdd;

        uint32_t id;
        bool buy;
        double price, qty;
        switch (code) {
            case EventType::kAdd: {
                if (next_id > 0xFFFFFFFFull)
                    throw InvalidConfig("synthetic order-id space exhausted");
                id = static_cast<uint32_t>(next_id++);
                buy = rng.uniform01() < 0.5;
                const double depth = 1.0 + static_cast<double>(rng.below(5));
                price = buy ? std::max(cfg.tick_size, mid - depth * cfg.tick_size)
                            : mid + depth * cfg.tick_size;
                qty = std::min(1e8, std::floor(rng.pareto(cfg.size_tail_alpha)));
                pool.push_back({id, buy, price, qty});
                break;
            }
            case EventType::kCancel: {
                const size_t k = rng.below(pool.size());
                const LiveOrder o = pool[k];
                pool[k] = pool.back();
                pool.pop_back();
                id = o.id; buy = o.buy; price = o.price; qty = o.qty;
                break;
            }
            case EventType::kModify: {
                const size_t k = rng.below(pool.size());
                LiveOrder& o = pool[k];
                o.qty = std::min(1e8, std::floor(rng.pareto(cfg.size_tail_alpha)));
                const double shift = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * cfg.tick_size;
                o.price = std::max(cfg.tick_size, o.price + shift);
                id = o.id; buy = o.buy; price = o.price; qty = o.qty;
                break;
            }
            default: {  // fill, full size
                const size_t k = rng.below(pool.size());
                const LiveOrder o = pool[k];
                pool[k] = pool.back();
                pool.pop_back();
                id = o.id; buy = o.buy; price = o.price; qty = o.qty;
                break;
            }
        }

        EventFlags flags;
        flags.exch = true;
        flags.buy = buy;
        flags.sell = !buy;

        PackedEvent e;
        e.ev_packed = pack_ev(id, EventType{code}, flags);
        e.exch_ts = kSynthEpochNs + static_cast<int64_t>(std::llround(t * 1e9));
        e.price = price;
        e.quantity = qty;
        stream.events.push_back(e);
    }

    return stream;
}

}  // namespace lobgen
