#include "abelkit/fastscan.hpp"

#include <bit>

#include "abelkit/errors.hpp"

namespace abelkit {

int SmallBitset::count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

bool SmallBitset::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

SmallBitset SmallBitset::operator&(const SmallBitset& o) const {
    SmallBitset r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

SmallBitset SmallBitset::operator|(const SmallBitset& o) const {
    SmallBitset r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

bool SmallBitset::is_subset_of(const SmallBitset& o) const {
    for (int i = 0; i < kWords; ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::size_t SmallBitset::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<int> SmallBitset::bits() const {
    std::vector<int> out;
    for (int w = 0; w < kWords; ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

ElementTable::ElementTable(const FgAbGroup& g) : group_(g) {
    auto ord = g.order();
    if (!ord)
        throw BudgetExceededError("element table requires a finite group, got " + format_group(g));
    if (*ord > kMaxTableOrder)
        throw BudgetExceededError("element table limited to order " +
                                  std::to_string(kMaxTableOrder) + ", got " + ord->str());
    size_ = int(*ord);

    strides_.assign(g.torsion.size(), Int(1));
    for (std::size_t i = 1; i < g.torsion.size(); ++i)
        strides_[i] = strides_[i - 1] * g.torsion[i - 1];

    elements_.reserve(size_);
    for (const GroupElement& e : elements(g)) elements_.push_back(e);

    add_.resize(std::size_t(size_) * size_);
    neg_.resize(size_);
    for (int a = 0; a < size_; ++a) {
        neg_[a] = std::uint16_t(index_of(abelkit::negate(elements_[a])));
        for (int b = 0; b <= a; ++b) {
            auto idx = std::uint16_t(index_of(abelkit::add(elements_[a], elements_[b])));
            add_[std::size_t(a) * size_ + b] = idx;
            add_[std::size_t(b) * size_ + a] = idx;
        }
    }
}

int ElementTable::index_of(const GroupElement& e) const {
    Int idx = 0;
    for (std::size_t i = 0; i < strides_.size(); ++i) idx += e.coords[i] * strides_[i];
    return int(idx);
}

int ElementTable::generator_index(int i) const { return int(strides_[i]); }

SmallBitset ElementTable::span(const std::vector<int>& generators) const {
    SmallBitset seen;
    seen.set(0);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : generators) {
                int y = add(x, g);
                if (!seen.test(y)) {
                    seen.set(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return seen;
}

HomScan::HomScan(const ElementTable& src, const ElementTable& tgt, const Int& budget)
    : src_(src), tgt_(tgt), desc_(hom_group(src.group(), tgt.group())), position_(0), done_(false) {
    if (!desc_.finite) throw InfiniteHomSetError("hom scan over an infinite Hom set");
    if (desc_.size > budget)
        throw BudgetExceededError("hom scan size " + desc_.size.str() + " exceeds budget " +
                                  budget.str());

    generator_values_.reserve(desc_.generators.size());
    for (const Morphism& g : desc_.generators) {
        std::vector<std::uint16_t> vals(src_.size());
        for (int x = 0; x < src_.size(); ++x)
            vals[x] = std::uint16_t(tgt_.index_of(apply(g, src_.element(x))));
        generator_values_.push_back(std::move(vals));
    }
    coeffs_.assign(desc_.generators.size(), Int(0));
    values_.assign(src_.size(), 0);
}

void HomScan::advance() {
    position_ += 1;
    for (std::size_t t = 0;; ++t) {
        if (t == coeffs_.size()) {
            done_ = true;
            return;
        }
        // One addition bumps coefficient t; a full cycle has already returned
        // that block to zero by the time the carry moves on.
        const auto& gv = generator_values_[t];
        for (int x = 0; x < src_.size(); ++x) values_[x] = tgt_.add(values_[x], gv[x]);
        coeffs_[t] += 1;
        if (coeffs_[t] < desc_.orders[t]) return;
        coeffs_[t] = 0;
    }
}

Morphism HomScan::current_morphism() const { return morphism_from_coefficients(desc_, coeffs_); }

SmallBitset HomScan::kernel_bits() const {
    SmallBitset k;
    for (int x = 0; x < src_.size(); ++x)
        if (values_[x] == 0) k.set(x);
    return k;
}

SmallBitset HomScan::image_bits() const {
    SmallBitset im;
    for (int x = 0; x < src_.size(); ++x) im.set(values_[x]);
    return im;
}

bool HomScan::is_zero() const {
    for (auto v : values_)
        if (v) return false;
    return true;
}

bool HomScan::is_idempotent() const {
    if (!(src_.group() == tgt_.group()))
        throw SourceTargetMismatchError("idempotence needs an endomorphism scan");
    for (std::size_t i = 0; i < src_.group().torsion.size(); ++i) {
        int g = src_.generator_index(int(i));
        if (values_[values_[g]] != values_[g]) return false;
    }
    return true;
}

bool HomScan::is_surjective_onto_table() const { return image_bits().count() == tgt_.size(); }

}  // namespace abelkit
