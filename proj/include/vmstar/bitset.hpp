#pragma once

#include <cstdint>
#include <vector>

namespace vmstar {

// Fixed-width dynamic bitset. Adjacency rows and tableau rows are stored in
// these so that a local complementation is a batch of word-wide XORs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : clear(i); }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void reset() { for (auto& w : w_) w = 0; }

    void xor_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }
    void and_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void or_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    // Popcount of AND, without materializing it.
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    // Index of the lowest set bit, or -1.
    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    // True if every set bit of this is also set in o.
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace vmstar
