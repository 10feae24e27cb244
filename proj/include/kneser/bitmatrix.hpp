#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kneser {

/// Square symmetric 0/1 matrix stored as one bitset row per vertex.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t u, std::size_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
    void set(std::size_t u, std::size_t v) { row(u)[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void set_sym(std::size_t u, std::size_t v) {
        set(u, v);
        set(v, u);
    }

    const std::uint64_t* row(std::size_t u) const { return bits_.data() + u * words_; }
    std::uint64_t* row(std::size_t u) { return bits_.data() + u * words_; }

    std::size_t degree(std::size_t u) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row(u)[w]);
        return c;
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c / 2;
    }

    /// Copy with vertex v deleted; remaining vertices keep their relative order.
    BitMatrix without_vertex(std::size_t v) const {
        BitMatrix out(n_ - 1);
        for (std::size_t a = 0, ia = 0; a < n_; ++a) {
            if (a == v) continue;
            for (std::size_t b = 0, ib = 0; b < n_; ++b) {
                if (b == v) continue;
                if (test(a, b)) out.set(ia, ib);
                ++ib;
            }
            ++ia;
        }
        return out;
    }

    BitMatrix complement() const {
        BitMatrix out(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (a != b && !test(a, b)) out.set(a, b);
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace kneser
