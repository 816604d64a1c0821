#include "abelkit/morphism.hpp"

#include "abelkit/errors.hpp"

namespace abelkit {

Morphism make_morphism(FgAbGroup source, FgAbGroup target, IntegerMatrix matrix) {
    if (matrix.rows() != target.coords() || matrix.cols() != source.coords())
        throw InvalidMorphismError("matrix shape " + std::to_string(matrix.rows()) + "x" +
                                   std::to_string(matrix.cols()) + " does not map " +
                                   format_group(source) + " to " + format_group(target));
    for (int i = 0; i < matrix.rows(); ++i) {
        Int t = target.modulus(i);
        if (t == 0) continue;
        for (int j = 0; j < matrix.cols(); ++j) matrix.at(i, j) = pos_mod(matrix.at(i, j), t);
    }
    for (int j = 0; j < matrix.cols(); ++j) {
        Int s = source.modulus(j);
        if (s == 0) continue;
        for (int i = 0; i < matrix.rows(); ++i) {
            Int t = target.modulus(i);
            Int v = s * matrix.at(i, j);
            bool ok = t == 0 ? v == 0 : v % t == 0;
            if (!ok)
                throw InvalidMorphismError("generator " + std::to_string(j) + " of order " +
                                           s.str() + " maps to an element of larger order in " +
                                           format_group(target));
        }
    }
    return Morphism{std::move(source), std::move(target), std::move(matrix)};
}

Morphism identity_morphism(const FgAbGroup& g) {
    return Morphism{g, g, IntegerMatrix::identity(g.coords())};
}

Morphism zero_morphism(const FgAbGroup& source, const FgAbGroup& target) {
    return Morphism{source, target, IntegerMatrix(target.coords(), source.coords())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.target != g.source)
        throw SourceTargetMismatchError("compose: inner target " + format_group(f.target) +
                                        " differs from outer source " + format_group(g.source));
    return make_morphism(f.source, g.target, g.matrix * f.matrix);
}

Morphism add_morphisms(const Morphism& f, const Morphism& g) {
    if (f.source != g.source || f.target != g.target)
        throw SourceTargetMismatchError("sum of morphisms with different endpoints");
    return make_morphism(f.source, f.target, f.matrix + g.matrix);
}

Morphism negate_morphism(const Morphism& f) {
    return make_morphism(f.source, f.target, -f.matrix);
}

GroupElement apply(const Morphism& f, const GroupElement& x) {
    if (x.group != f.source) throw SourceTargetMismatchError("apply: element not in source");
    std::vector<Int> out(f.target.coords());
    for (int i = 0; i < f.target.coords(); ++i)
        for (int j = 0; j < f.source.coords(); ++j) out[i] += f.matrix.at(i, j) * x.coords[j];
    return make_element(f.target, std::move(out));
}

namespace {

// Lattice of integer vectors that represent the zero element of g.
IntegerMatrix zero_rep_lattice(const FgAbGroup& g) {
    IntegerMatrix lat(g.coords(), int(g.torsion.size()));
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        lat.at(g.free_rank + int(i), int(i)) = g.torsion[i];
    return lat;
}

}  // namespace

IntegerMatrix kernel_vector_basis(const Morphism& f) {
    const int n = f.source.coords();
    IntegerMatrix stacked(f.target.coords(), n + int(f.target.torsion.size()));
    for (int i = 0; i < f.target.coords(); ++i)
        for (int j = 0; j < n; ++j) stacked.at(i, j) = f.matrix.at(i, j);
    for (std::size_t i = 0; i < f.target.torsion.size(); ++i)
        stacked.at(f.target.free_rank + int(i), n + int(i)) = f.target.torsion[i];

    IntegerMatrix basis = kernel_lattice_basis(stacked);
    IntegerMatrix out(n, basis.cols());
    for (int j = 0; j < basis.cols(); ++j)
        for (int i = 0; i < n; ++i) out.at(i, j) = basis.at(i, j);
    return out;
}

bool is_injective(const Morphism& f) {
    IntegerMatrix vecs = kernel_vector_basis(f);
    for (int j = 0; j < vecs.cols(); ++j)
        for (int i = 0; i < f.source.coords(); ++i) {
            Int m = f.source.modulus(i);
            const Int& v = vecs.at(i, j);
            if (m == 0 ? v != 0 : v % m != 0) return false;
        }
    return true;
}

bool is_surjective(const Morphism& f) {
    // Cokernel is zero iff the image columns plus the torsion relations span.
    IntegerMatrix zero_lat = zero_rep_lattice(f.target);
    IntegerMatrix rel(f.target.coords(), f.matrix.cols() + zero_lat.cols());
    for (int i = 0; i < f.target.coords(); ++i) {
        for (int j = 0; j < f.matrix.cols(); ++j) rel.at(i, j) = f.matrix.at(i, j);
        for (int j = 0; j < zero_lat.cols(); ++j) rel.at(i, f.matrix.cols() + j) = zero_lat.at(i, j);
    }
    return group_from_presentation(f.target.coords(), rel).group.is_zero();
}

HomGroupDescription hom_group(const FgAbGroup& source, const FgAbGroup& target) {
    HomGroupDescription desc;
    desc.source = source;
    desc.target = target;
    for (int j = 0; j < source.coords(); ++j) {
        Int s = source.modulus(j);
        for (int i = 0; i < target.coords(); ++i) {
            Int t = target.modulus(i);
            Int entry, order;
            if (s == 0) {
                entry = 1;
                order = t;  // 0 when both free: an infinite cyclic direction
            } else if (t == 0) {
                continue;  // no nonzero maps from torsion into Z
            } else {
                Int g = gcd(s, t);
                if (g == 1) continue;
                entry = t / g;
                order = g;
            }
            IntegerMatrix m(target.coords(), source.coords());
            m.at(i, j) = entry;
            desc.generators.push_back(make_morphism(source, target, std::move(m)));
            desc.orders.push_back(order);
            if (order == 0)
                desc.finite = false;
            else
                desc.size *= order;
        }
    }
    if (!desc.finite) desc.size = 0;
    return desc;
}

Morphism morphism_from_coefficients(const HomGroupDescription& desc,
                                    const std::vector<Int>& coeffs) {
    if (coeffs.size() != desc.generators.size())
        throw Error("coefficient count does not match generator count");
    IntegerMatrix m(desc.target.coords(), desc.source.coords());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] == 0) continue;
        const IntegerMatrix& g = desc.generators[t].matrix;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (g.at(i, j) != 0) m.at(i, j) += coeffs[t] * g.at(i, j);
    }
    return make_morphism(desc.source, desc.target, std::move(m));
}

Int default_hom_budget() { return Int(1) << 25; }

HomStream::HomStream(FgAbGroup source, FgAbGroup target, const Int& budget)
    : desc_(hom_group(source, target)) {
    if (!desc_.finite)
        throw InfiniteHomSetError("Hom(" + format_group(source) + ", " + format_group(target) +
                                  ") is infinite");
    if (desc_.size > budget)
        throw BudgetExceededError("Hom(" + format_group(source) + ", " + format_group(target) +
                                  ") has " + desc_.size.str() + " elements, budget " +
                                  budget.str());
    coeffs_.assign(desc_.generators.size(), 0);
    cur_ = zero_morphism(desc_.source, desc_.target);
}

void HomStream::advance() {
    if (done_) throw Error("advance past the end of a hom stream");
    IntegerMatrix m = cur_.matrix;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        m = m + desc_.generators[t].matrix;
        if (++coeffs_[t] < desc_.orders[t]) {
            cur_ = make_morphism(desc_.source, desc_.target, std::move(m));
            return;
        }
        coeffs_[t] = 0;
        // adding the generator orders[t] times in total returns this block to zero
    }
    done_ = true;
}

std::vector<Morphism> all_homs(const FgAbGroup& source, const FgAbGroup& target,
                               const Int& budget) {
    HomStream st(source, target, budget);
    std::vector<Morphism> out;
    out.reserve(std::size_t(to_int64(st.size(), "hom set size")));
    while (!st.done()) {
        out.push_back(st.current());
        st.advance();
    }
    return out;
}

DirectSumMaps direct_sum_maps(const FgAbGroup& a, const FgAbGroup& b) {
    const int na = a.coords(), nb = b.coords(), n = na + nb;
    IntegerMatrix rel(n, n);
    for (int i = 0; i < na; ++i) rel.at(i, i) = a.modulus(i);
    for (int i = 0; i < nb; ++i) rel.at(na + i, na + i) = b.modulus(i);
    PresentedQuotient q = group_from_presentation(n, rel);

    auto block_inj = [&](const FgAbGroup& part, int offset) {
        IntegerMatrix m(q.group.coords(), part.coords());
        for (int i = 0; i < q.group.coords(); ++i)
            for (int j = 0; j < part.coords(); ++j) m.at(i, j) = q.projection.at(i, offset + j);
        return make_morphism(part, q.group, std::move(m));
    };
    auto block_proj = [&](const FgAbGroup& part, int offset) {
        IntegerMatrix m(part.coords(), q.group.coords());
        for (int i = 0; i < part.coords(); ++i)
            for (int j = 0; j < q.group.coords(); ++j) m.at(i, j) = q.lift.at(offset + i, j);
        return make_morphism(q.group, part, std::move(m));
    };

    DirectSumMaps maps{q.group, block_inj(a, 0), block_inj(b, na), block_proj(a, 0),
                       block_proj(b, na)};
    if (!(compose(maps.proj_a, maps.inj_a) == identity_morphism(a)) ||
        !(compose(maps.proj_b, maps.inj_b) == identity_morphism(b)) ||
        !compose(maps.proj_a, maps.inj_b).is_zero() ||
        !compose(maps.proj_b, maps.inj_a).is_zero() ||
        !(add_morphisms(compose(maps.inj_a, maps.proj_a), compose(maps.inj_b, maps.proj_b)) ==
          identity_morphism(q.group)))
        throw InternalCheckError("direct sum maps do not satisfy the biproduct identities");
    return maps;
}

}  // namespace abelkit
