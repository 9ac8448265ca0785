#pragma once

// Sparse multivariate polynomial arithmetic over GF(2) with weighted grading,
// a fixed lexicographic monomial order, Lucas binomials, and a canonical text
// format. Everything here is an immutable value; operations are pure.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grasschar {

/// binom(n, k) mod 2. By Lucas' theorem this is 1 iff every binary digit of k
/// is dominated by the corresponding digit of n, i.e. k + (n-k) has no carry.
inline int lucas_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    return (k & (n - k)) == 0 ? 1 : 0;
}

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Ordered list of graded variables. The list position is the lex priority:
/// earlier variables compare greater. Names are unique and nonempty, degrees
/// are >= 1, and at most four variables are supported (monomial exponent
/// vectors pack into one 64-bit word, 16 bits per variable).
class VariableTable {
public:
    struct Var {
        std::string name;
        int degree;
    };

    static constexpr std::size_t max_vars = 4;

    explicit VariableTable(std::vector<Var> vars) : vars_(std::move(vars)) {
        if (vars_.empty() || vars_.size() > max_vars)
            throw std::invalid_argument("VariableTable: need 1 to 4 variables");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].name.empty())
                throw std::invalid_argument("VariableTable: empty variable name");
            if (vars_[i].degree < 1)
                throw std::invalid_argument("VariableTable: degree of '" + vars_[i].name +
                                            "' must be >= 1");
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[j].name == vars_[i].name)
                    throw std::invalid_argument("VariableTable: duplicate variable '" +
                                                vars_[i].name + "'");
        }
    }

    std::size_t size() const noexcept { return vars_.size(); }
    const Var& var(std::size_t i) const { return vars_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        return std::nullopt;
    }

    bool operator==(const VariableTable& other) const {
        if (vars_.size() != other.vars_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != other.vars_[i].name || vars_[i].degree != other.vars_[i].degree)
                return false;
        return true;
    }
    bool operator!=(const VariableTable& other) const { return !(*this == other); }

    /// "w1:1 w2:2 w3:3" -- used by the Groebner-basis serialization header.
    std::string order_spec() const {
        std::string out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) out += ' ';
            out += vars_[i].name;
            out += ':';
            out += std::to_string(vars_[i].degree);
        }
        return out;
    }

private:
    std::vector<Var> vars_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::initializer_list<VariableTable::Var> vars) {
    return std::make_shared<const VariableTable>(std::vector<VariableTable::Var>(vars));
}

/// Two tables are aligned when they are the same object or content-equal.
inline bool same_table(const VariableTable& a, const VariableTable& b) {
    return &a == &b || a == b;
}

class PolyGF2;

/// Exponent vector aligned with a VariableTable. Exponents are 16-bit and
/// packed into one word, highest-priority variable in the most significant
/// lane, so plain lexicographic comparison is an integer comparison.
class Monomial {
public:
    Monomial(const VariableTable& table, std::span<const int> exponents)
        : packed_(0), table_(&table) {
        if (exponents.size() != table.size())
            throw std::invalid_argument("Monomial: exponent count does not match table");
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0 || exponents[i] > 0xFFFF)
                throw std::overflow_error("Monomial: exponent outside 0..65535");
            packed_ |= static_cast<std::uint64_t>(exponents[i]) << shift(i);
        }
    }

    Monomial(const VariableTable& table, std::initializer_list<int> exponents)
        : Monomial(table, std::span<const int>(exponents.begin(), exponents.size())) {}

    static Monomial one(const VariableTable& table) { return Monomial(table, 0); }

    int exponent(std::size_t i) const {
        return static_cast<int>((packed_ >> shift(i)) & 0xFFFF);
    }

    std::vector<int> exponents() const {
        std::vector<int> out(table_->size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent(i);
        return out;
    }

    /// Weighted degree, sum of exponent * variable degree.
    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < table_->size(); ++i)
            d += exponent(i) * table_->var(i).degree;
        return d;
    }

    bool is_one() const noexcept { return packed_ == 0; }
    const VariableTable& table() const noexcept { return *table_; }
    std::uint64_t packed() const noexcept { return packed_; }

private:
    friend class PolyGF2;
    friend Monomial mono_mul(const Monomial&, const Monomial&);
    friend Monomial mono_div(const Monomial&, const Monomial&);
    friend Monomial mono_lcm(const Monomial&, const Monomial&);
    friend PolyGF2 operator+(const PolyGF2&, const PolyGF2&);
    friend PolyGF2 mono_shift(const PolyGF2&, const Monomial&);

    Monomial(const VariableTable& table, std::uint64_t packed) : packed_(packed), table_(&table) {}

    static constexpr int shift(std::size_t i) {
        return 16 * static_cast<int>(VariableTable::max_vars - 1 - i);
    }

    std::uint64_t packed_;
    const VariableTable* table_;
};

enum class MonoOrder { less, equal, greater };

namespace detail {
inline void require_aligned(const VariableTable& a, const VariableTable& b, const char* what) {
    if (!same_table(a, b))
        throw std::invalid_argument(std::string(what) + ": variable tables are not aligned");
}
}  // namespace detail

/// Pure lexicographic comparison by exponent vectors in variable-priority
/// order; no degree pre-comparison.
inline MonoOrder mono_compare(const VariableTable& order, const Monomial& m1, const Monomial& m2) {
    detail::require_aligned(order, m1.table(), "mono_compare");
    detail::require_aligned(order, m2.table(), "mono_compare");
    if (m1.packed() < m2.packed()) return MonoOrder::less;
    if (m1.packed() > m2.packed()) return MonoOrder::greater;
    return MonoOrder::equal;
}

inline bool operator==(const Monomial& a, const Monomial& b) {
    detail::require_aligned(a.table(), b.table(), "Monomial::operator==");
    return a.packed() == b.packed();
}
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

/// Does a divide b?
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    detail::require_aligned(a.table(), b.table(), "mono_divides");
    for (std::size_t i = 0; i < VariableTable::max_vars; ++i) {
        const int s = 16 * static_cast<int>(VariableTable::max_vars - 1 - i);
        if (((a.packed() >> s) & 0xFFFF) > ((b.packed() >> s) & 0xFFFF)) return false;
    }
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    detail::require_aligned(a.table(), b.table(), "mono_mul");
    for (std::size_t i = 0; i < VariableTable::max_vars; ++i) {
        const int s = Monomial::shift(i);
        if (((a.packed_ >> s) & 0xFFFF) + ((b.packed_ >> s) & 0xFFFF) > 0xFFFF)
            throw std::overflow_error("mono_mul: exponent exceeds 65535");
    }
    // lanes checked above, so the packed sum has no cross-lane carry
    return Monomial(a.table(), a.packed_ + b.packed_);
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    if (!mono_divides(a, b)) throw std::invalid_argument("mono_div: not divisible");
    return Monomial(b.table(), b.packed_ - a.packed_);
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    detail::require_aligned(a.table(), b.table(), "mono_lcm");
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < VariableTable::max_vars; ++i) {
        const int s = Monomial::shift(i);
        packed |= std::max((a.packed_ >> s) & 0xFFFF, (b.packed_ >> s) & 0xFFFF)
                  << static_cast<unsigned>(s);
    }
    return Monomial(a.table(), packed);
}

/// Polynomial over GF(2): a finite set of monomials (present = coefficient 1)
/// sharing one VariableTable, stored in strictly descending lex order. The
/// zero polynomial is the empty set.
class PolyGF2 {
public:
    explicit PolyGF2(TablePtr table) : table_(std::move(table)) {
        if (!table_) throw std::invalid_argument("PolyGF2: null table");
    }

    static PolyGF2 zero(TablePtr table) { return PolyGF2(std::move(table)); }

    static PolyGF2 one(TablePtr table) {
        PolyGF2 p(std::move(table));
        p.terms_.push_back(Monomial::one(*p.table_));
        return p;
    }

    static PolyGF2 from_monomial(TablePtr table, const Monomial& m) {
        PolyGF2 p(std::move(table));
        detail::require_aligned(*p.table_, m.table(), "PolyGF2::from_monomial");
        p.terms_.push_back(Monomial(*p.table_, m.packed()));
        return p;
    }

    /// Builds the canonical form: sorts descending and cancels duplicate
    /// monomials in pairs (characteristic 2).
    static PolyGF2 from_terms(TablePtr table, std::vector<Monomial> terms) {
        PolyGF2 p(std::move(table));
        for (auto& m : terms) {
            detail::require_aligned(*p.table_, m.table(), "PolyGF2::from_terms");
            m = Monomial(*p.table_, m.packed());
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Monomial& a, const Monomial& b) { return a.packed() > b.packed(); });
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j].packed() == terms[i].packed()) ++j;
            if ((j - i) % 2) p.terms_.push_back(terms[i]);
            i = j;
        }
        return p;
    }

    /// The polynomial name^exp.
    static PolyGF2 variable(TablePtr table, std::string_view name, int exp = 1) {
        auto idx = table->index_of(name);
        if (!idx) throw std::invalid_argument("PolyGF2::variable: unknown variable");
        std::vector<int> e(table->size(), 0);
        e[*idx] = exp;
        Monomial m(*table, e);
        return from_monomial(std::move(table), m);
    }

    const TablePtr& table_ptr() const noexcept { return table_; }
    const VariableTable& table() const noexcept { return *table_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // views into the term storage outlive only the polynomial they came
    // from, so they cannot be taken from a temporary
    std::span<const Monomial> terms() const& noexcept { return terms_; }
    std::span<const Monomial> terms() && = delete;

    const Monomial& leading_monomial() const& {
        if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() && = delete;

    int coeff_of(const Monomial& m) const {
        detail::require_aligned(*table_, m.table(), "coeff_of");
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), m.packed(),
            [](const Monomial& t, std::uint64_t key) { return t.packed() > key; });
        return (it != terms_.end() && it->packed() == m.packed()) ? 1 : 0;
    }

    /// Zero counts as homogeneous (of no particular degree).
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.front().degree();
        for (const auto& m : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    std::optional<int> homogeneous_degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return terms_.front().degree();
    }

    PolyGF2& operator+=(const PolyGF2& other) {
        *this = *this + other;
        return *this;
    }

    /// GF(2) addition: symmetric difference of term sets.
    friend PolyGF2 operator+(const PolyGF2& a, const PolyGF2& b) {
        detail::require_aligned(*a.table_, *b.table_, "poly_add");
        PolyGF2 out(a.table_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const std::uint64_t pa = a.terms_[i].packed(), pb = b.terms_[j].packed();
            if (pa > pb) out.terms_.push_back(a.terms_[i++]);
            else if (pb > pa) out.terms_.push_back(Monomial(*a.table_, pb)), ++j;
            else ++i, ++j;  // equal monomials cancel
        }
        for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.terms_.push_back(Monomial(*a.table_, b.terms_[j].packed()));
        return out;
    }

    /// Multiplication by a single monomial; preserves the descending order.
    friend PolyGF2 mono_shift(const PolyGF2& p, const Monomial& m) {
        detail::require_aligned(*p.table_, m.table(), "mono_shift");
        PolyGF2 out(p.table_);
        out.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) out.terms_.push_back(mono_mul(t, Monomial(*p.table_, m.packed())));
        return out;
    }

    friend PolyGF2 operator*(const PolyGF2& a, const PolyGF2& b) {
        detail::require_aligned(*a.table_, *b.table_, "poly_mul");
        if (a.is_zero() || b.is_zero()) return PolyGF2(a.table_);
        const PolyGF2& outer = a.terms_.size() <= b.terms_.size() ? a : b;
        const PolyGF2& inner = a.terms_.size() <= b.terms_.size() ? b : a;
        PolyGF2 acc(a.table_);
        for (const auto& m : outer.terms_) acc += mono_shift(inner, m);
        return acc;
    }

    bool operator==(const PolyGF2& other) const {
        if (!same_table(*table_, *other.table_)) return false;
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].packed() != other.terms_[i].packed()) return false;
        return true;
    }
    bool operator!=(const PolyGF2& other) const { return !(*this == other); }

private:
    TablePtr table_;
    std::vector<Monomial> terms_;
};

inline PolyGF2 poly_pow(const PolyGF2& p, std::uint64_t e) {
    PolyGF2 result = PolyGF2::one(p.table_ptr());
    PolyGF2 base = p;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Canonical text form: terms in descending lex, factors in variable-priority
/// order, "^1" omitted, " + " separator, "0" for zero, "1" for the empty
/// monomial.
inline std::string print_poly(const PolyGF2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& m : p.terms()) {
        if (!first_term) out += " + ";
        first_term = false;
        if (m.is_one()) {
            out += '1';
            continue;
        }
        bool first_factor = true;
        for (std::size_t i = 0; i < p.table().size(); ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            if (!first_factor) out += '*';
            first_factor = false;
            out += p.table().var(i).name;
            if (e >= 2) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    std::string_view s;
    const VariableTable& table;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    int parse_uint() {
        if (eof() || s[pos] < '0' || s[pos] > '9') fail("expected a number");
        long v = 0;
        while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            if (v > 0xFFFF) fail("exponent exceeds 65535");
            ++pos;
        }
        return static_cast<int>(v);
    }

    std::size_t parse_varname() {
        const std::size_t start = pos;
        if (eof() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected a variable name");
        while (!eof() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        const std::string_view name = s.substr(start, pos - start);
        auto idx = table.index_of(name);
        if (!idx) throw parse_error("unknown variable '" + std::string(name) + "'", start);
        return *idx;
    }

    void parse_factor(std::vector<int>& exps) {
        const std::size_t var = parse_varname();
        int e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos;
            skip_ws();
            e = parse_uint();
        }
        if (exps[var] + e > 0xFFFF) fail("exponent exceeds 65535");
        exps[var] += e;
    }

    Monomial parse_term() {
        skip_ws();
        if (!eof() && peek() == '1') {
            ++pos;
            return Monomial::one(table);
        }
        std::vector<int> exps(table.size(), 0);
        parse_factor(exps);
        while (true) {
            skip_ws();
            if (eof() || peek() != '*') break;
            ++pos;
            skip_ws();
            parse_factor(exps);
        }
        return Monomial(table, exps);
    }
};

}  // namespace detail

/// Parses the canonical grammar; arbitrary whitespace is accepted around "+",
/// "*" and "^". Round-trips with print_poly.
inline PolyGF2 parse_poly(std::string_view text, TablePtr table) {
    detail::PolyParser p{text, *table};
    p.skip_ws();
    if (p.eof()) p.fail("empty polynomial");
    if (p.peek() == '0') {
        ++p.pos;
        p.skip_ws();
        if (!p.eof()) p.fail("unexpected input after '0'");
        return PolyGF2::zero(std::move(table));
    }
    std::vector<Monomial> terms;
    terms.push_back(p.parse_term());
    while (true) {
        p.skip_ws();
        if (p.eof()) break;
        if (p.peek() != '+') p.fail("expected '+'");
        ++p.pos;
        terms.push_back(p.parse_term());
    }
    return PolyGF2::from_terms(std::move(table), std::move(terms));
}

}  // namespace grasschar
