#ifndef POLYSURF_GF2_HPP
#define POLYSURF_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polysurf {

// Packed bit vector over GF(2). Bit k corresponds to basis element k
// (face k when used as a 2-chain, edge k when used as a 1-chain).
// Bits at positions >= width() are kept zero.
class BitChain {
public:
    BitChain() = default;
    explicit BitChain(int width) : width_(width), words_(word_count(width), 0) {}

    int width() const { return width_; }

    bool test(int k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }

    void set(int k, bool value = true) {
        if (value)
            words_[k >> 6] |= std::uint64_t(1) << (k & 63);
        else
            words_[k >> 6] &= ~(std::uint64_t(1) << (k & 63));
    }

    void flip(int k) { words_[k >> 6] ^= std::uint64_t(1) << (k & 63); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    int popcount() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    // Index of the lowest set bit, -1 when zero.
    int lowest_set_bit() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    BitChain& operator^=(const BitChain& o) {
        if (width_ != o.width_) throw std::invalid_argument("BitChain width mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitChain operator^(BitChain a, const BitChain& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitChain&) const = default;

    // Position 0 is the leftmost character, so face 1 prints first.
    std::string to_bitstring() const {
        std::string s(width_, '0');
        for (int k = 0; k < width_; ++k)
            if (test(k)) s[k] = '1';
        return s;
    }

    static BitChain from_bitstring(const std::string& s) {
        BitChain c(static_cast<int>(s.size()));
        for (int k = 0; k < c.width_; ++k) {
            if (s[k] == '1')
                c.set(k);
            else if (s[k] != '0')
                throw std::invalid_argument("bitstring character must be 0 or 1");
        }
        return c;
    }

    // Parity of the bitwise AND (the GF(2) inner product).
    static bool dot(const BitChain& a, const BitChain& b) {
        if (a.width_ != b.width_) throw std::invalid_argument("BitChain width mismatch");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1;
    }

    // Same order as lexicographic comparison of to_bitstring().
    static bool bitstring_less(const BitChain& a, const BitChain& b) {
        for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
            std::uint64_t x = a.words_[i] ^ b.words_[i];
            if (x) {
                int k = std::countr_zero(x);
                return (b.words_[i] >> k) & 1u;
            }
        }
        return a.width_ < b.width_;
    }

private:
    static std::size_t word_count(int width) {
        return (static_cast<std::size_t>(width) + 63) / 64;
    }

    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense rectangular matrix over GF(2), stored as row bit vectors.
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows), BitChain(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return data_[r].test(c); }
    void set(int r, int c, bool v = true) { data_[r].set(c, v); }
    void flip(int r, int c) { data_[r].flip(c); }

    const BitChain& row(int r) const { return data_[r]; }
    BitChain& row(int r) { return data_[r]; }

    bool in_kernel(const BitChain& x) const {
        for (const auto& r : data_)
            if (BitChain::dot(r, x)) return false;
        return true;
    }

private:
    int rows_;
    int cols_;
    std::vector<BitChain> data_;
};

// Raised when an enumeration would exceed its cap; the caller may retry
// with a larger cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 20;

namespace detail {

// Fully reduced echelon rows paired with their pivot columns, sorted by
// pivot column. The input matrix is not modified.
inline std::vector<std::pair<int, BitChain>> reduced_rows(const Gf2Matrix& m) {
    std::vector<std::pair<int, BitChain>> pivots;
    for (int r = 0; r < m.rows(); ++r) {
        BitChain cur = m.row(r);
        for (const auto& [c, prow] : pivots)
            if (cur.test(c)) cur ^= prow;
        int c = cur.lowest_set_bit();
        if (c < 0) continue;
        for (auto& [pc, prow] : pivots)
            if (prow.test(c)) prow ^= cur;
        pivots.emplace_back(c, std::move(cur));
    }
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return pivots;
}

}  // namespace detail

inline int gf2_rank(const Gf2Matrix& m) {
    return static_cast<int>(detail::reduced_rows(m).size());
}

// Basis of {x : Mx = 0}, one vector per free column, ordered by free
// column index. Deterministic for a fixed input.
inline std::vector<BitChain> kernel_basis(const Gf2Matrix& m) {
    auto pivots = detail::reduced_rows(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (const auto& [c, prow] : pivots) is_pivot[c] = true;

    std::vector<BitChain> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitChain v(m.cols());
        v.set(f);
        for (const auto& [c, prow] : pivots)
            if (prow.test(f)) v.set(c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// All 2^d - 1 nonzero combinations of the d basis vectors, in Gray-code
// order over the coefficient mask (basis vectors ordered as given, i.e.
// by free column). Throws CapExceeded before yielding anything when the
// total count exceeds cap.
inline std::vector<BitChain> enumerate_kernel(const std::vector<BitChain>& basis,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
    const std::size_t d = basis.size();
    if (d == 0) return {};
    if (d >= 63)
        throw CapExceeded("kernel dimension " + std::to_string(d) + " exceeds enumeration range");
    const std::uint64_t total = (std::uint64_t(1) << d) - 1;
    if (total > cap)
        throw CapExceeded("kernel has " + std::to_string(total) +
                          " nonzero elements, above the cap of " + std::to_string(cap));

    std::vector<BitChain> out;
    out.reserve(static_cast<std::size_t>(total));
    BitChain cur(basis.front().width());
    for (std::uint64_t m = 1; m <= total; ++m) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(m))];
        out.push_back(cur);
    }
    return out;
}

}  // namespace polysurf

#endif
