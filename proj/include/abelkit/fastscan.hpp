#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelkit/group.hpp"
#include "abelkit/morphism.hpp"

namespace abelkit {

// Largest group order the table-driven scanners handle. Beyond this the
// generic (matrix-based) paths must be used.
inline constexpr int kMaxTableOrder = 512;

// Fixed-width bitset over element indexes of a table-backed group.
class SmallBitset {
public:
    static constexpr int kBits = kMaxTableOrder;
    static constexpr int kWords = kBits / 64;

    SmallBitset() : words_{} {}

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const;
    bool none() const;

    bool operator==(const SmallBitset& o) const { return words_ == o.words_; }
    bool operator!=(const SmallBitset& o) const { return words_ != o.words_; }
    bool operator<(const SmallBitset& o) const { return words_ < o.words_; }

    SmallBitset operator&(const SmallBitset& o) const;
    SmallBitset operator|(const SmallBitset& o) const;
    bool is_subset_of(const SmallBitset& o) const;

    std::size_t hash() const;

    // Indexes of the set bits, ascending.
    std::vector<int> bits() const;

private:
    std::array<std::uint64_t, kWords> words_;
};

struct SmallBitsetHash {
    std::size_t operator()(const SmallBitset& b) const { return b.hash(); }
};

// Dense addition/negation tables for a finite group of order <= kMaxTableOrder.
// Element indexes follow the elements() enumeration order (identity first,
// first coordinate fastest).
class ElementTable {
public:
    explicit ElementTable(const FgAbGroup& g);

    const FgAbGroup& group() const { return group_; }
    int size() const { return size_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
    int negate(int a) const { return neg_[a]; }
    int zero() const { return 0; }

    const GroupElement& element(int idx) const { return elements_[idx]; }
    int index_of(const GroupElement& e) const;

    // Index of the i-th canonical generator (coordinate vector e_i).
    int generator_index(int i) const;

    // Closure of the given elements under addition; always contains 0.
    SmallBitset span(const std::vector<int>& generators) const;

private:
    FgAbGroup group_;
    int size_;
    std::vector<GroupElement> elements_;
    std::vector<Int> strides_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
};

// Streams every morphism src -> tgt as a full value table (f(x) for each
// element index x of the source). Enumeration order and coefficients match
// HomStream; the zero morphism comes first. Each advance costs O(|src|)
// table lookups amortized.
class HomScan {
public:
    HomScan(const ElementTable& src, const ElementTable& tgt, const Int& budget);

    bool done() const { return done_; }
    void advance();

    const std::vector<std::uint16_t>& values() const { return values_; }
    const HomGroupDescription& description() const { return desc_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int size() const { return desc_.size; }
    const Int& position() const { return position_; }

    Morphism current_morphism() const;

    SmallBitset kernel_bits() const;
    SmallBitset image_bits() const;
    bool is_zero() const;
    // Requires src.group() == tgt.group().
    bool is_idempotent() const;
    bool is_surjective_onto_table() const;

private:
    const ElementTable& src_;
    const ElementTable& tgt_;
    HomGroupDescription desc_;
    std::vector<std::vector<std::uint16_t>> generator_values_;
    std::vector<Int> coeffs_;
    std::vector<std::uint16_t> values_;
    Int position_;
    bool done_;
};

}  // namespace abelkit
