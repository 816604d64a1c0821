#include "abelkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "abelkit/errors.hpp"

namespace abelkit {

std::optional<Int> FgAbGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

void canonical_check(const FgAbGroup& g) {
    if (g.free_rank < 0) throw Error("negative free rank");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (g.torsion[i] < 2) throw Error("torsion factor below 2");
        if (i + 1 < g.torsion.size() && g.torsion[i + 1] % g.torsion[i] != 0)
            throw Error("torsion factors do not form a divisibility chain");
    }
}

FgAbGroup group_from_factors(int free_rank, const std::vector<Int>& factors) {
    for (const auto& d : factors)
        if (d < 1) throw Error("group factor must be >= 1");
    IntegerMatrix rel(int(factors.size()), int(factors.size()));
    for (std::size_t i = 0; i < factors.size(); ++i) rel.at(int(i), int(i)) = factors[i];
    PresentedQuotient q = group_from_presentation(int(factors.size()), rel);
    FgAbGroup g = q.group;
    g.free_rank += free_rank;
    return g;
}

PresentedQuotient group_from_presentation(int num_generators, const IntegerMatrix& relations) {
    if (relations.rows() != num_generators)
        throw Error("presentation relations must have one row per generator");
    SnfDecomposition s = smith_normal_form(relations);

    std::vector<int> free_rows, torsion_rows;
    for (int i = 0; i < num_generators; ++i) {
        Int d = s.diag(i);
        if (d == 0)
            free_rows.push_back(i);
        else if (d >= 2)
            torsion_rows.push_back(i);
    }

    FgAbGroup g;
    g.free_rank = int(free_rows.size());
    for (int i : torsion_rows) g.torsion.push_back(s.diag(i));
    canonical_check(g);

    std::vector<int> coord_rows = free_rows;
    coord_rows.insert(coord_rows.end(), torsion_rows.begin(), torsion_rows.end());

    IntegerMatrix proj(g.coords(), num_generators);
    IntegerMatrix lift(num_generators, g.coords());
    for (int c = 0; c < g.coords(); ++c) {
        int row = coord_rows[c];
        Int m = g.modulus(c);
        for (int j = 0; j < num_generators; ++j) {
            Int v = s.U.at(row, j);
            proj.at(c, j) = m == 0 ? v : pos_mod(v, m);
            lift.at(j, c) = s.U_inv.at(j, row);
        }
    }
    return PresentedQuotient{std::move(g), std::move(proj), std::move(lift)};
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors = a.torsion;
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    return group_from_factors(a.free_rank + b.free_rank, factors);
}

namespace {

// Partitions of e in descending-lex order: (e), (e-1,1), ..., (1,...,1).
void partitions_rec(int e, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = std::min(e, maxpart); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(e - first, first, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(e, e, cur, out);
    return out;
}

}  // namespace

std::vector<FgAbGroup> enumerate_groups(const Int& max_order) {
    if (max_order < 1) throw Error("max_order must be >= 1");
    std::vector<FgAbGroup> out;
    for (Int n = 1; n <= max_order; ++n) {
        auto fact = factorize(n);
        std::vector<std::vector<std::vector<int>>> parts;
        for (const auto& [p, e] : fact) parts.push_back(partitions(e));

        std::vector<std::size_t> idx(fact.size(), 0);
        for (;;) {
            // Align each prime's largest exponent with the largest invariant factor.
            std::size_t len = 0;
            for (std::size_t k = 0; k < fact.size(); ++k)
                len = std::max(len, parts[k][idx[k]].size());
            std::vector<Int> descending(len, 1);
            for (std::size_t k = 0; k < fact.size(); ++k) {
                const auto& lam = parts[k][idx[k]];
                for (std::size_t j = 0; j < lam.size(); ++j) {
                    Int pe = 1;
                    for (int t = 0; t < lam[j]; ++t) pe *= fact[k].first;
                    descending[j] *= pe;
                }
            }
            FgAbGroup g;
            g.torsion.assign(descending.rbegin(), descending.rend());
            canonical_check(g);
            if (g.order() != n) throw Error("group enumeration order mismatch");
            out.push_back(std::move(g));

            std::size_t k = fact.size();
            while (k > 0) {
                --k;
                if (++idx[k] < parts[k].size()) break;
                idx[k] = 0;
                if (k == 0) goto next_order;
            }
            if (fact.empty()) break;  // n == 1: single zero group
        }
    next_order:;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Int(s.substr(start, pos - start));
    }
};

}  // namespace

FgAbGroup parse_group(const std::string& text) {
    Parser p{text};
    int free_rank = 0;
    std::vector<Int> factors;
    bool zero_seen = false;

    for (;;) {
        p.skip_ws();
        if (p.pos >= p.s.size()) p.fail("expected a term");
        if (p.s[p.pos] == '0') {
            ++p.pos;
            zero_seen = true;
        } else if (p.s[p.pos] == 'Z') {
            ++p.pos;
            Int mod = 0;
            if (p.eat('/')) {
                mod = p.number();
                if (mod < 1) p.fail("modulus must be >= 1");
            }
            Int exp = 1;
            if (p.eat('^')) exp = p.number();
            if (exp < 0 || exp > 64) p.fail("unreasonable exponent");
            for (Int i = 0; i < exp; ++i) {
                if (mod == 0)
                    ++free_rank;
                else
                    factors.push_back(mod);
            }
        } else {
            p.fail("expected 'Z' or '0'");
        }
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        if (!p.eat('+')) p.fail("expected '+'");
    }
    (void)zero_seen;
    return group_from_factors(free_rank, factors);
}

std::string format_group(const FgAbGroup& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank > 1) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const auto& d : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

bool GroupElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

GroupElement make_element(const FgAbGroup& g, std::vector<Int> coords) {
    if (int(coords.size()) != g.coords()) throw Error("element coordinate arity mismatch");
    for (int i = 0; i < g.coords(); ++i) {
        Int m = g.modulus(i);
        if (m != 0) coords[i] = pos_mod(coords[i], m);
    }
    return GroupElement{g, std::move(coords)};
}

GroupElement zero_element(const FgAbGroup& g) {
    return GroupElement{g, std::vector<Int>(g.coords())};
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
    if (x.group != y.group) throw SourceTargetMismatchError("element sum across groups");
    std::vector<Int> c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
    return make_element(x.group, std::move(c));
}

GroupElement negate(const GroupElement& x) {
    std::vector<Int> c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
    return make_element(x.group, std::move(c));
}

ElementRange::ElementRange(FgAbGroup g) : g_(std::move(g)) {
    if (!g_.is_finite())
        throw InfiniteGroupError("cannot stream elements of " + format_group(g_));
}

ElementRange::iterator::iterator(const FgAbGroup* g, bool end)
    : g_(g), cur_(g->coords()), end_(end) {}

GroupElement ElementRange::iterator::operator*() const { return GroupElement{*g_, cur_}; }

ElementRange::iterator& ElementRange::iterator::operator++() {
    for (std::size_t i = 0; i < cur_.size(); ++i) {
        if (++cur_[i] < g_->modulus(int(i))) return *this;
        cur_[i] = 0;
    }
    end_ = true;
    return *this;
}

bool ElementRange::iterator::operator==(const iterator& other) const {
    if (end_ != other.end_) return false;
    return end_ || cur_ == other.cur_;
}

}  // namespace abelkit
