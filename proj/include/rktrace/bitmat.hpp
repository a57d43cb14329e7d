#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rktrace/gray.hpp"

namespace rktrace {

struct BitMatrix {
    std::size_t rows = 0, cols = 0, stride = 0; // stride in 64-bit words
    std::vector<std::uint64_t> data;

    static BitMatrix zeros(std::size_t r, std::size_t c) {
        BitMatrix m;
        m.rows = r;
        m.cols = c;
        m.stride = (c + 63) / 64;
        m.data.assign(r * m.stride, 0);
        return m;
    }

    static BitMatrix from_rows(const std::vector<BinaryWord>& rws) {
        if (rws.empty()) return {};
        BitMatrix m = zeros(rws.size(), rws[0].length);
        for (std::size_t r = 0; r < rws.size(); ++r) {
            if (rws[r].length != m.cols) throw std::invalid_argument("ragged rows");
            for (std::size_t w = 0; w < rws[r].words.size(); ++w)
                m.data[r * m.stride + w] = rws[r].words[w];
        }
        return m;
    }

    bool get(std::size_t r, std::size_t c) const {
        return (data[r * stride + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v)
            data[r * stride + (c >> 6)] |= bit;
        else
            data[r * stride + (c >> 6)] &= ~bit;
    }

    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < stride; ++w)
            data[dst * stride + w] ^= data[src * stride + w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < stride; ++w)
            std::swap(data[a * stride + w], data[b * stride + w]);
    }

    BinaryWord row_word(std::size_t r) const {
        BinaryWord y = BinaryWord::zeros(cols);
        for (std::size_t w = 0; w < stride; ++w) y.words[w] = data[r * stride + w];
        return y;
    }
};

// in-place reduced row echelon form; returns the pivot columns in order
inline std::vector<std::size_t> rref(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && !m.get(p, c)) ++p;
        if (p == m.rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(BitMatrix m) {
    return rref(m).size();
}

// canonical basis of {x : M x = 0}: one row per free column of the RREF,
// ascending; row for free column f has bit f set
inline BitMatrix nullspace(BitMatrix m) {
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    BitMatrix basis = BitMatrix::zeros(m.cols - pivots.size(), m.cols);
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.get(i, f)) basis.set(out, pivots[i], true);
        ++out;
    }
    return basis;
}

// one solution of M x = b with free variables zeroed, or nullopt when the
// system is inconsistent
inline std::optional<std::vector<std::uint8_t>> solve(const BitMatrix& m, const BinaryWord& b) {
    if (b.length != m.rows) throw std::invalid_argument("rhs length mismatch");
    BitMatrix aug = BitMatrix::zeros(m.rows, m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t w = 0; w < m.stride; ++w) aug.data[r * aug.stride + w] = m.data[r * m.stride + w];
        // clear any tail bits that would collide with the augmented column
        if (m.cols & 63) {
            const std::uint64_t keep = (std::uint64_t{1} << (m.cols & 63)) - 1;
            aug.data[r * aug.stride + (m.cols >> 6)] &= keep;
        }
        aug.set(r, m.cols, b.get(r));
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<std::uint8_t> x(m.cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.get(i, m.cols) ? 1 : 0;
    return x;
}

// xor of the matrix rows selected by the coefficient bits
inline BinaryWord combine_rows(const BitMatrix& m, const std::vector<std::uint8_t>& coeffs) {
    if (coeffs.size() != m.rows) throw std::invalid_argument("coefficient count mismatch");
    BinaryWord y = BinaryWord::zeros(m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        if (coeffs[r])
            for (std::size_t w = 0; w < m.stride; ++w) y.words[w] ^= m.data[r * m.stride + w];
    return y;
}

} // namespace rktrace
