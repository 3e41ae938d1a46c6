#pragma once

#include <cstdint>
#include <vector>

namespace fracext {

// Fixed-capacity bitset sized at runtime; used for candidate sets in
// independent-set enumeration and branch-and-bound.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }
    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return words_[i >> 6] >> (i & 63) & 1; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (int)(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    int next(int after) const {
        for (int i = after + 1; i < n_; ++i) {
            uint64_t w = words_[i >> 6] >> (i & 63);
            if (w == 0) {
                i = (i | 63);
                continue;
            }
            return i + __builtin_ctzll(w);
        }
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace fracext
