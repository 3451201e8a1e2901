#ifndef BFC_DEFINING_SET_HPP
#define BFC_DEFINING_SET_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bfc/gf2m.hpp"

namespace bfc {

/// A subset D of GF(2^m), kept both as a sorted element list and as a
/// 2^m-bit set. Defining sets are sets, not multisets; duplicates collapse.
class DefiningSet {
public:
    DefiningSet(unsigned m, std::vector<elem> elems) : m_(m) {
        std::uint64_t n = std::uint64_t(1) << m;
        bits_.assign((n + 63) / 64, 0);
        for (elem v : elems) {
            if (v >= n) throw std::invalid_argument("DefiningSet: element out of range");
            bits_[v >> 6] |= std::uint64_t(1) << (v & 63);
        }
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        elems_ = std::move(elems);
    }

    unsigned m() const { return m_; }
    std::uint64_t group_order() const { return std::uint64_t(1) << m_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<elem>& elements() const { return elems_; }
    const std::vector<std::uint64_t>& words() const { return bits_; }

    bool contains(elem v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }

    DefiningSet without_zero() const {
        std::vector<elem> e = elems_;
        if (!e.empty() && e.front() == 0) e.erase(e.begin());
        return DefiningSet(m_, std::move(e));
    }

private:
    unsigned m_;
    std::vector<elem> elems_;
    std::vector<std::uint64_t> bits_;
};

} // namespace bfc

#endif
