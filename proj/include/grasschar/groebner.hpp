#pragma once

// Multivariate division, Buchberger's algorithm, reduced Groebner bases over
// GF(2) under pure lex, ideal membership and equality, standard monomials and
// Hilbert functions of graded quotients.

#include "gf2poly.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace grasschar {

/// A reduced Groebner basis under the table's lex order. Invariants enforced
/// on construction: no element is zero, elements are sorted strictly
/// ascending by leading monomial, leading monomials are pairwise non-dividing,
/// and no monomial of any element is divisible by another element's leading
/// monomial. The empty basis represents the zero ideal.
class GroebnerBasis {
public:
    GroebnerBasis(TablePtr table, std::vector<PolyGF2> reduced_elements)
        : table_(std::move(table)), elements_(std::move(reduced_elements)) {
        if (!table_) throw std::invalid_argument("GroebnerBasis: null table");
        for (const auto& e : elements_) {
            detail::require_aligned(*table_, e.table(), "GroebnerBasis");
            if (e.is_zero()) throw std::invalid_argument("GroebnerBasis: zero element");
        }
        for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
            if (elements_[i].leading_monomial().packed() >=
                elements_[i + 1].leading_monomial().packed())
                throw std::invalid_argument("GroebnerBasis: elements not ascending by LM");
        for (std::size_t i = 0; i < elements_.size(); ++i)
            for (std::size_t j = 0; j < elements_.size(); ++j) {
                if (i == j) continue;
                for (const auto& m : elements_[j].terms())
                    if (mono_divides(elements_[i].leading_monomial(), m))
                        throw std::invalid_argument("GroebnerBasis: not reduced");
            }
        for (const auto& e : elements_) lms_.push_back(e.leading_monomial());
    }

    static GroebnerBasis empty(TablePtr table) { return GroebnerBasis(std::move(table), {}); }

    const TablePtr& table_ptr() const noexcept { return table_; }
    const VariableTable& table() const noexcept { return *table_; }
    std::span<const PolyGF2> elements() const noexcept { return elements_; }
    std::span<const Monomial> leading_monomials() const noexcept { return lms_; }

    bool operator==(const GroebnerBasis& other) const {
        if (!same_table(*table_, *other.table_)) return false;
        if (elements_.size() != other.elements_.size()) return false;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (elements_[i] != other.elements_[i]) return false;
        return true;
    }

private:
    TablePtr table_;
    std::vector<PolyGF2> elements_;
    std::vector<Monomial> lms_;
};

namespace detail {

/// Top-reduction loop. Divisors must be nonzero; when several leading
/// monomials divide the current monomial, the smallest one in lex order wins
/// (the remainder does not depend on the choice, the rule fixes traces).
/// Returns the unique remainder with no monomial divisible by any divisor LM.
inline PolyGF2 reduce_by(const PolyGF2& p, std::span<const PolyGF2> divisors) {
    std::vector<Monomial> work(p.terms().begin(), p.terms().end());
    std::vector<Monomial> remainder;
    while (!work.empty()) {
        const Monomial m = work.front();
        const PolyGF2* best = nullptr;
        for (const auto& d : divisors) {
            if (!mono_divides(d.leading_monomial(), m)) continue;
            if (!best ||
                d.leading_monomial().packed() < best->leading_monomial().packed())
                best = &d;
        }
        if (!best) {
            remainder.push_back(m);
            work.erase(work.begin());
            continue;
        }
        const Monomial q = mono_div(m, best->leading_monomial());
        // m cancels against q * LM(best); merge the two strictly smaller tails
        const PolyGF2 shifted = mono_shift(*best, q);
        std::vector<Monomial> next;
        next.reserve(work.size() + shifted.term_count());
        std::size_t i = 1, j = 1;  // skip m and the shifted leading term
        const auto st = shifted.terms();
        while (i < work.size() && j < st.size()) {
            if (work[i].packed() > st[j].packed()) next.push_back(work[i++]);
            else if (st[j].packed() > work[i].packed()) next.push_back(st[j++]);
            else ++i, ++j;
        }
        for (; i < work.size(); ++i) next.push_back(work[i]);
        for (; j < st.size(); ++j) next.push_back(st[j]);
        work = std::move(next);
    }
    return PolyGF2::from_terms(p.table_ptr(), std::move(remainder));
}

}  // namespace detail

/// lcm(LM f, LM g)/LM(f) * f + lcm/LM(g) * g; signs are vacuous mod 2 and the
/// leading terms cancel.
inline PolyGF2 s_polynomial(const PolyGF2& f, const PolyGF2& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    detail::require_aligned(f.table(), g.table(), "s_polynomial");
    const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    return mono_shift(f, mono_div(l, f.leading_monomial())) +
           mono_shift(g, mono_div(l, g.leading_monomial()));
}

/// The unique remainder of p modulo gb: no monomial of the result is
/// divisible by any leading monomial of gb. NF(p) = 0 iff p lies in the
/// ideal, and NF is GF(2)-linear.
inline PolyGF2 normal_form(const PolyGF2& p, const GroebnerBasis& gb) {
    detail::require_aligned(p.table(), gb.table(), "normal_form");
    return detail::reduce_by(p, gb.elements());
}

inline bool ideal_member(const PolyGF2& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

/// Reduced Groebner bases are unique per order, so ideal equality is element
/// set equality.
inline bool ideals_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!same_table(a.table(), b.table()))
        throw std::invalid_argument("ideals_equal: order mismatch");
    return a == b;
}

/// Buchberger's algorithm with the normal selection strategy (pairs by
/// ascending lcm) and the coprime-LM criterion, followed by minimization and
/// full interreduction. Generators must be homogeneous; zero generators are
/// dropped. The empty generator list yields the empty basis (zero ideal).
inline GroebnerBasis buchberger_reduced(std::vector<PolyGF2> generators, TablePtr table) {
    std::vector<PolyGF2> basis;
    for (auto& g : generators) {
        detail::require_aligned(*table, g.table(), "buchberger_reduced");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("buchberger_reduced: generators must be homogeneous");
        basis.push_back(std::move(g));
    }

    struct PairKey {
        int lcm_degree;
        std::uint64_t lcm;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        const Monomial l = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        queue.insert(PairKey{l.degree(), l.packed(), i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

    while (!queue.empty()) {
        const PairKey key = *queue.begin();
        queue.erase(queue.begin());
        const Monomial& li = basis[key.i].leading_monomial();
        const Monomial& lj = basis[key.j].leading_monomial();
        // coprime criterion: lcm == product means the S-polynomial reduces to 0
        if (mono_lcm(li, lj).packed() == mono_mul(li, lj).packed()) continue;
        const PolyGF2 s = s_polynomial(basis[key.i], basis[key.j]);
        const PolyGF2 r = detail::reduce_by(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r);
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) enqueue(i, basis.size() - 1);
    }

    // minimize: drop elements whose LM is divisible by another's LM
    std::vector<PolyGF2> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
            if (mono_divides(mj, mi) && (mi.packed() != mj.packed() || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce tails until stable; over GF(2) every pass strictly shrinks
    // or the set is already reduced
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<PolyGF2> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            PolyGF2 r = detail::reduce_by(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const PolyGF2& a, const PolyGF2& b) {
        return a.leading_monomial().packed() < b.leading_monomial().packed();
    });
    return GroebnerBasis(std::move(table), std::move(minimal));
}

/// Certification: every S-polynomial of the basis reduces to zero by the
/// basis. All pairs are reduced explicitly, no criteria shortcuts.
inline bool is_closed_under_s_polynomials(const GroebnerBasis& gb) {
    const auto elems = gb.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!normal_form(s_polynomial(elems[i], elems[j]), gb).is_zero()) return false;
    return true;
}

/// All monomials of the given weighted degree, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(const VariableTable& table, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> exps(table.size(), 0);
    const std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == table.size()) {
            if (left % table.var(i).degree == 0) {
                exps[i] = left / table.var(i).degree;
                if (exps[i] <= 0xFFFF) out.push_back(Monomial(table, exps));
            }
            return;
        }
        const int d = table.var(i).degree;
        for (int e = std::min(left / d, 0xFFFF); e >= 0; --e) {
            exps[i] = e;
            rec(i + 1, left - e * d);
        }
        exps[i] = 0;
    };
    rec(0, degree);
    return out;
}

/// A presented graded algebra: variables with degrees plus a reduced Groebner
/// basis. Standard monomials (those divisible by no leading monomial) are
/// cached per degree; their cosets are an additive basis of the quotient.
///
/// The cache fills lazily under a single writer. seal() precomputes a degree
/// range and freezes the value for concurrent shared reads; queries above the
/// sealed range then throw instead of mutating.
class GradedQuotient {
public:
    explicit GradedQuotient(GroebnerBasis gb, std::optional<int> top_degree_hint = {})
        : gb_(std::move(gb)), hint_(top_degree_hint) {}

    const GroebnerBasis& groebner() const noexcept { return gb_; }
    const TablePtr& table_ptr() const noexcept { return gb_.table_ptr(); }
    const VariableTable& table() const noexcept { return gb_.table(); }
    std::optional<int> top_degree_hint() const noexcept { return hint_; }

    const std::vector<Monomial>& standard_monomials(int degree) const {
        if (sealed_ && degree > sealed_to_)
            throw std::out_of_range("GradedQuotient: query above sealed degree " +
                                    std::to_string(sealed_to_));
        auto it = cache_.find(degree);
        if (it != cache_.end()) return it->second;
        std::vector<Monomial> std_mons;
        for (const auto& m : monomials_of_degree(table(), degree)) {
            bool divisible = false;
            for (const auto& lm : gb_.leading_monomials())
                if (mono_divides(lm, m)) {
                    divisible = true;
                    break;
                }
            if (!divisible) std_mons.push_back(m);
        }
        return cache_.emplace(degree, std::move(std_mons)).first->second;
    }

    /// Position of a monomial in the standard basis of its degree.
    std::optional<std::size_t> standard_index(int degree, const Monomial& m) const {
        const auto& basis = standard_monomials(degree);
        auto it = std::lower_bound(
            basis.begin(), basis.end(), m.packed(),
            [](const Monomial& b, std::uint64_t key) { return b.packed() > key; });
        if (it == basis.end() || it->packed() != m.packed()) return std::nullopt;
        return static_cast<std::size_t>(it - basis.begin());
    }

    PolyGF2 normal_form(const PolyGF2& p) const { return grasschar::normal_form(p, gb_); }

    void seal(int up_to) {
        if (sealed_) {
            if (up_to > sealed_to_)
                throw std::logic_error("GradedQuotient: already sealed to a lower degree");
            return;
        }
        for (int d = 0; d <= up_to; ++d) standard_monomials(d);
        sealed_ = true;
        sealed_to_ = up_to;
    }

    bool is_sealed() const noexcept { return sealed_; }
    int sealed_to() const noexcept { return sealed_to_; }

private:
    GroebnerBasis gb_;
    std::optional<int> hint_;
    mutable std::map<int, std::vector<Monomial>> cache_;
    bool sealed_ = false;
    int sealed_to_ = -1;
};

/// Entry d counts the standard monomials of degree d, 0 <= d <= up_to.
inline std::vector<std::size_t> hilbert_function(const GradedQuotient& q, int up_to) {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d) out.push_back(q.standard_monomials(d).size());
    return out;
}

/// Text form: a header naming the order, then one canonical polynomial per
/// line sorted ascending by leading monomial. Round-trips bit-exactly.
inline std::string serialize(const GroebnerBasis& gb) {
    std::string out = "# order: " + gb.table().order_spec() + "\n";
    for (const auto& e : gb.elements()) {
        out += print_poly(e);
        out += '\n';
    }
    return out;
}

inline GroebnerBasis parse_groebner(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("# order: ", 0) != 0)
        throw parse_error("missing '# order:' header", 0);
    std::istringstream hdr(line.substr(9));
    std::vector<VariableTable::Var> vars;
    std::string tok;
    while (hdr >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
            throw parse_error("malformed order entry '" + tok + "'", 0);
        int degree = 0;
        try {
            degree = std::stoi(tok.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("malformed degree in order entry '" + tok + "'", 0);
        }
        vars.push_back({tok.substr(0, colon), degree});
    }
    auto table = std::make_shared<const VariableTable>(std::move(vars));
    std::vector<PolyGF2> elems;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        elems.push_back(parse_poly(line, table));
    }
    return GroebnerBasis(std::move(table), std::move(elems));
}

}  // namespace grasschar
