#ifndef TFVS_VERTEX_SET_HPP_
#define TFVS_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tfvs {

/// Subset of the vertex labels 1..n of a fixed universe, stored as a dense
/// bitset. Up to 128 vertices live inline; larger universes spill to the heap.
/// Iteration is in ascending label order.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const_iterator() = default;
        const_iterator(const VertexSet* set, int word) : set_(set), word_(word) { settle(); }

        int operator*() const { return word_ * kWordBits + std::countr_zero(bits_) + 1; }
        const_iterator& operator++() {
            bits_ &= bits_ - 1;
            if (bits_ == 0) {
                ++word_;
                settle();
            }
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

    private:
        void settle() {
            const int words = static_cast<int>(set_->words_.size());
            while (word_ < words && set_->words_[word_] == 0) ++word_;
            bits_ = word_ < words ? set_->words_[word_] : 0;
            if (word_ > words) word_ = words;
        }

        const VertexSet* set_ = nullptr;
        int word_ = 0;
        Word bits_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<int> labels) : VertexSet(universe) {
        for (int v : labels) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }
    /// Labels 1..k.
    static VertexSet prefix(int universe, int k) {
        VertexSet s(universe);
        for (int v = 1; v <= k; ++v) s.insert(v);
        return s;
    }
    static VertexSet from_labels(int universe, const std::vector<int>& labels) {
        VertexSet s(universe);
        for (int v : labels) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        const int b = v - 1;
        return (words_[b / kWordBits] >> (b % kWordBits)) & 1U;
    }
    void insert(int v) {
        const int b = v - 1;
        words_[b / kWordBits] |= Word{1} << (b % kWordBits);
    }
    void erase(int v) {
        const int b = v - 1;
        words_[b / kWordBits] &= ~(Word{1} << (b % kWordBits));
    }
    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int size() const {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }
    /// |*this ∩ other| without materializing the intersection.
    int intersection_size(const VertexSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    /// Smallest label in the set, or 0 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]) + 1;
        return 0;
    }

    VertexSet complement() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    /// Arbitrary but fixed total order, suitable for std::set / std::map keys.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, static_cast<int>(words_.size())); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    /// Low word of the bitset; the whole set when universe() <= 64.
    Word low_word() const { return words_.empty() ? 0 : words_[0]; }

    /// Comma-separated ascending labels, "" for the empty set.
    std::string to_string() const;

private:
    static std::size_t word_count(int n) { return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits); }
    void trim() {
        const int tail = n_ % kWordBits;
        if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
    }

    int n_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace tfvs

#endif  // TFVS_VERTEX_SET_HPP_
