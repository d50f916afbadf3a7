#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "gdom/graph.hpp"

namespace gdom::detail {

// Fixed-width bit set used inside the search engines. W words hold up to
// 64 * W vertices.
template <std::size_t W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool intersects(const Mask& o) const {
        for (std::size_t i = 0; i < W; ++i) if (w[i] & o.w[i]) return true;
        return false;
    }
    /// this \ o is non-empty
    bool escapes(const Mask& o) const {
        for (std::size_t i = 0; i < W; ++i) if (w[i] & ~o.w[i]) return true;
        return false;
    }
    std::size_t count_outside(const Mask& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & ~o.w[i]));
        return c;
    }
    Mask operator|(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Mask operator&(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    /// this \ o
    Mask minus(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    /// Lowest set bit; the mask must be non-empty.
    std::size_t lowest() const {
        std::size_t i = 0;
        while (!w[i]) ++i;
        return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            for (std::uint64_t x = w[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        }
    }
    friend bool operator==(const Mask&, const Mask&) = default;
};

template <std::size_t W>
struct MaskHash {
    std::size_t operator()(const Mask<W>& m) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : m.w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

template <std::size_t W>
Mask<W> to_mask(const VertexSet& s) {
    Mask<W> m;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) m.set(v);
    return m;
}

template <std::size_t W>
Mask<W> full_mask(std::size_t n) {
    Mask<W> m;
    for (std::size_t i = 0; i < n; ++i) m.set(i);
    return m;
}

// Hash map with a hard entry cap. When full, the oldest inserted key is
// evicted; callers must treat a miss as "unknown", never as a value.
template <class Key, class Value, class Hash>
class FifoMemo {
public:
    explicit FifoMemo(std::size_t cap) : cap_(cap == 0 ? 1 : cap) {}

    Value* find(const Key& k) {
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : &it->second;
    }

    Value& emplace(const Key& k, const Value& v) {
        auto [it, inserted] = map_.try_emplace(k, v);
        if (!inserted) {
            it->second = v;
            return it->second;
        }
        order_.push_back(k);
        while (map_.size() > cap_) {
            map_.erase(order_.front());
            order_.pop_front();
            ++evictions_;
        }
        // the fresh key is never the one evicted while cap_ >= 1
        return map_.find(k)->second;
    }

    std::size_t size() const { return map_.size(); }
    std::uint64_t evictions() const { return evictions_; }

private:
    std::size_t cap_;
    std::unordered_map<Key, Value, Hash> map_;
    std::deque<Key> order_;
    std::uint64_t evictions_ = 0;
};

} // namespace gdom::detail
