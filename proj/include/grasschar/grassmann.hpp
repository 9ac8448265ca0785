#pragma once

// The Grassmannian layer: dual Stiefel-Whitney polynomial families, Borel
// presentations of H*(G_{n,k}; Z2), the image-of-p* rings Z2[w2,w3]/J_{n,3},
// the presented oriented rings, restriction and multiplication maps realized
// per degree as GF(2) matrices, and the Gysin dimension oracle.

#include "bitmatrix.hpp"
#include "groebner.hpp"

namespace grasschar {

/// Shared (w1:1, ..., wk:k) table, k in 1..3. Lex order w1 > w2 > w3.
inline TablePtr borel_table(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("borel_table: k must be in 1..3");
    static const TablePtr tables[3] = {
        make_table({{"w1", 1}}),
        make_table({{"w1", 1}, {"w2", 2}}),
        make_table({{"w1", 1}, {"w2", 2}, {"w3", 3}}),
    };
    return tables[k - 1];
}

/// Shared (w2:2, w3:3) table. Lex order w2 > w3.
inline TablePtr image_table() {
    static const TablePtr table = make_table({{"w2", 2}, {"w3", 3}});
    return table;
}

/// g_r = sum over 2b+3c=r of binom(b+c, b) w2^b w3^c, coefficients mod 2.
inline PolyGF2 g_poly(int r) {
    if (r < 0) throw std::invalid_argument("g_poly: r must be >= 0");
    auto table = image_table();
    std::vector<Monomial> terms;
    for (int c = 0; 3 * c <= r; ++c) {
        const int rem = r - 3 * c;
        if (rem % 2) continue;
        const int b = rem / 2;
        if (lucas_binom(static_cast<std::uint64_t>(b) + c, b))
            terms.push_back(Monomial(*table, {b, c}));
    }
    return PolyGF2::from_terms(std::move(table), std::move(terms));
}

/// Closed formula for the dual class in three variables:
/// sum over a+2b+3c=r of binom(a+b+c, a) binom(b+c, b) w1^a w2^b w3^c.
inline PolyGF2 wbar_closed(int r) {
    if (r < 0) throw std::invalid_argument("wbar_closed: r must be >= 0");
    auto table = borel_table(3);
    std::vector<Monomial> terms;
    for (int c = 0; 3 * c <= r; ++c)
        for (int b = 0; 2 * b + 3 * c <= r; ++b) {
            const int a = r - 2 * b - 3 * c;
            if (lucas_binom(static_cast<std::uint64_t>(a) + b + c, a) &&
                lucas_binom(static_cast<std::uint64_t>(b) + c, b))
                terms.push_back(Monomial(*table, {a, b, c}));
        }
    return PolyGF2::from_terms(std::move(table), std::move(terms));
}

/// wbar_0..wbar_{r_max} by the k-term recurrence
/// wbar_r = w1 wbar_{r-1} + ... + wk wbar_{r-k} coming from the power-series
/// identity (1 + w1 + ... + wk)(wbar_0 + wbar_1 + ...) = 1.
inline std::vector<PolyGF2> wbar_sequence(int r_max, int k) {
    if (r_max < 0) throw std::invalid_argument("wbar_sequence: r_max must be >= 0");
    auto table = borel_table(k);
    std::vector<PolyGF2> seq;
    seq.reserve(static_cast<std::size_t>(r_max) + 1);
    seq.push_back(PolyGF2::one(table));
    std::vector<PolyGF2> vars;
    for (int i = 1; i <= k; ++i) vars.push_back(PolyGF2::variable(table, "w" + std::to_string(i)));
    for (int r = 1; r <= r_max; ++r) {
        PolyGF2 acc(table);
        for (int i = 1; i <= k && i <= r; ++i) acc += vars[static_cast<std::size_t>(i) - 1] * seq[static_cast<std::size_t>(r - i)];
        seq.push_back(std::move(acc));
    }
    return seq;
}

/// Dual Stiefel-Whitney class wbar_r over (w1..wk). For k=3 both the
/// recurrence and the closed formula are evaluated and must agree.
inline PolyGF2 wbar(int r, int k = 3) {
    if (k < 1 || k > 3) throw std::invalid_argument("wbar: k must be in 1..3");
    if (r < 0) throw std::invalid_argument("wbar: r must be >= 0");
    PolyGF2 by_recurrence = wbar_sequence(r, k).back();
    if (k == 3 && by_recurrence != wbar_closed(r))
        throw std::logic_error("wbar: recurrence and closed formula disagree at r=" +
                               std::to_string(r));
    return by_recurrence;
}

/// f_i = g_{2^t-3+2^i} for 0 <= i <= t-1.
inline std::vector<PolyGF2> fukaya_family(int t) {
    if (t < 3 || t > 8) throw std::invalid_argument("fukaya_family: t must be in 3..8");
    std::vector<PolyGF2> fam;
    for (int i = 0; i < t; ++i) fam.push_back(g_poly((1 << t) - 3 + (1 << i)));
    return fam;
}

enum class RingCase { minus1, minus2, minus3 };

inline std::string_view to_string(RingCase c) {
    switch (c) {
        case RingCase::minus1: return "minus1";
        case RingCase::minus2: return "minus2";
        case RingCase::minus3: return "minus3";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<RingCase> ring_case_from_string(std::string_view s) {
    if (s == "minus1") return RingCase::minus1;
    if (s == "minus2") return RingCase::minus2;
    if (s == "minus3") return RingCase::minus3;
    return std::nullopt;
}

/// Parameters of an oriented ring: n = 2^t - 1, 2^t - 2 or 2^t - 3 for
/// 3 <= t <= 8; gamma is the free coefficient of the n = 2^t - 1 presentation
/// and is normalized to 0 in the other cases.
struct GrassmannParams {
    int t;
    RingCase ring_case;
    int gamma;

    GrassmannParams(int t_, RingCase c, int gamma_ = 0) : t(t_), ring_case(c), gamma(gamma_) {
        if (t < 3 || t > 8) throw std::invalid_argument("GrassmannParams: t must be in 3..8");
        if (gamma != 0 && gamma != 1) throw std::invalid_argument("GrassmannParams: gamma must be 0 or 1");
        if (ring_case != RingCase::minus1) gamma = 0;
    }

    int offset() const {
        return ring_case == RingCase::minus1 ? 1 : ring_case == RingCase::minus2 ? 2 : 3;
    }
    int n() const { return (1 << t) - offset(); }
    int a_degree() const { return (1 << t) - 4; }
    /// Dimension of the oriented Grassmannian, 3(n-3).
    int top_degree() const { return 3 * (n() - 3); }
};

using RingPtr = std::shared_ptr<GradedQuotient>;

/// H*(G_{n,k}) = Z2[w1..wk] / (wbar_{n-k+1}, ..., wbar_n), lex w1 > ... > wk.
inline RingPtr borel_ring(int n, int k) {
    if (k < 1 || k > 3 || n < k) throw std::invalid_argument("borel_ring: need n >= k, k in 1..3");
    auto seq = wbar_sequence(n, k);
    std::vector<PolyGF2> gens(seq.begin() + (n - k + 1), seq.end());
    return std::make_shared<GradedQuotient>(buchberger_reduced(std::move(gens), borel_table(k)),
                                            k * (n - k));
}

/// im p* = Z2[w2,w3] / J_{n,3} with J_{n,3} = (g_{n-2}, g_{n-1}, g_n),
/// lex w2 > w3. Zero generators (g_{2^t-3}) are dropped by Buchberger.
inline RingPtr image_ring(int n) {
    if (n < 6) throw std::invalid_argument("image_ring: n must be >= 6");
    std::vector<PolyGF2> gens{g_poly(n - 2), g_poly(n - 1), g_poly(n)};
    return std::make_shared<GradedQuotient>(buchberger_reduced(std::move(gens), image_table()));
}

/// Substitutes one polynomial per source variable; images live in the target
/// table. Pure ring-homomorphism evaluation.
inline PolyGF2 substitute(const PolyGF2& p, TablePtr target, std::span<const PolyGF2> images) {
    if (images.size() != p.table().size())
        throw std::invalid_argument("substitute: need one image per source variable");
    for (const auto& img : images) detail::require_aligned(*target, img.table(), "substitute");
    PolyGF2 acc(target);
    for (const auto& m : p.terms()) {
        PolyGF2 prod = PolyGF2::one(target);
        for (std::size_t i = 0; i < images.size(); ++i) {
            const int e = m.exponent(i);
            if (e) prod = prod * poly_pow(images[i], static_cast<std::uint64_t>(e));
        }
        acc += prod;
    }
    return acc;
}

namespace detail {
/// Lifts a (w2,w3) polynomial into a table that also contains w2 and w3.
inline PolyGF2 lift_to(const PolyGF2& p, const TablePtr& target) {
    std::vector<PolyGF2> images{PolyGF2::variable(target, "w2"), PolyGF2::variable(target, "w3")};
    return substitute(p, target, images);
}
}  // namespace detail

/// The presented oriented ring of G~_{n,3} over (a : 2^t-4, w2, w3) with lex
/// a > w2 > w3:
///   n = 2^t-1: (g_{2^t-2}, g_{2^t-1}, a^2 + g_{2^t-4} a + gamma w2^{2^t-4})
///   n = 2^t-2: (g_{2^t-4}, g_{2^t-2}, a^2)
///   n = 2^t-3: (g_{2^t-5}, g_{2^t-4}, a^2)
/// The reduced basis is computed by Buchberger, never assumed.
inline RingPtr oriented_ring(const GrassmannParams& params) {
    const int p2 = 1 << params.t;
    auto table = make_table({{"a", p2 - 4}, {"w2", 2}, {"w3", 3}});
    const PolyGF2 a = PolyGF2::variable(table, "a");
    const PolyGF2 a_sq = a * a;
    std::vector<PolyGF2> gens;
    switch (params.ring_case) {
        case RingCase::minus1: {
            gens.push_back(detail::lift_to(g_poly(p2 - 2), table));
            gens.push_back(detail::lift_to(g_poly(p2 - 1), table));
            PolyGF2 rel = a_sq + detail::lift_to(g_poly(p2 - 4), table) * a;
            if (params.gamma) rel += PolyGF2::variable(table, "w2", p2 - 4);
            gens.push_back(std::move(rel));
            break;
        }
        case RingCase::minus2:
            gens.push_back(detail::lift_to(g_poly(p2 - 4), table));
            gens.push_back(detail::lift_to(g_poly(p2 - 2), table));
            gens.push_back(a_sq);
            break;
        case RingCase::minus3:
            gens.push_back(detail::lift_to(g_poly(p2 - 5), table));
            gens.push_back(detail::lift_to(g_poly(p2 - 4), table));
            gens.push_back(a_sq);
            break;
    }
    return std::make_shared<GradedQuotient>(buchberger_reduced(std::move(gens), table),
                                            params.top_degree());
}

/// H*(G~_{2^t-2,2}) = Z2[b, w2] / (w2^{2^{t-1}-1}, b^2 + w2^{2^{t-1}-2} b)
/// with |b| = 2^t-4, lex b > w2.
inline RingPtr oriented_ring_k2(int t) {
    if (t < 3 || t > 8) throw std::invalid_argument("oriented_ring_k2: t must be in 3..8");
    const int h = 1 << (t - 1);
    auto table = make_table({{"b", (1 << t) - 4}, {"w2", 2}});
    const PolyGF2 b = PolyGF2::variable(table, "b");
    std::vector<PolyGF2> gens{PolyGF2::variable(table, "w2", h - 1),
                              b * b + PolyGF2::variable(table, "w2", h - 2) * b};
    return std::make_shared<GradedQuotient>(buchberger_reduced(std::move(gens), table),
                                            2 * ((1 << t) - 4));
}

/// Degree-preserving or degree-shifting linear map between graded quotients:
/// either a ring homomorphism given by generator images, or multiplication by
/// a fixed homogeneous element.
///
/// The matrix at degree d has rows indexed by the source standard monomials
/// of degree d and columns by the target standard monomials of degree
/// d + shift, entries being normal-form coefficients. Kernels follow the
/// column-vector convention of BitMatrix (stack and transpose internally).
class GradedLinearMap {
public:
    enum class Kind { ring_hom, multiplication };

    static GradedLinearMap ring_hom(RingPtr source, RingPtr target,
                                    std::vector<PolyGF2> generator_images) {
        if (!source || !target) throw std::invalid_argument("ring_hom: null ring");
        if (generator_images.size() != source->table().size())
            throw std::invalid_argument("ring_hom: need one image per source generator");
        for (std::size_t i = 0; i < generator_images.size(); ++i) {
            const auto& img = generator_images[i];
            detail::require_aligned(target->table(), img.table(), "ring_hom");
            if (!img.is_zero() && img.homogeneous_degree() != source->table().var(i).degree)
                throw std::invalid_argument("ring_hom: image of '" + source->table().var(i).name +
                                            "' has the wrong degree");
        }
        return GradedLinearMap(Kind::ring_hom, std::move(source), std::move(target),
                               std::move(generator_images), std::nullopt, 0);
    }

    static GradedLinearMap multiplication(RingPtr ring, PolyGF2 multiplier) {
        if (!ring) throw std::invalid_argument("multiplication: null ring");
        detail::require_aligned(ring->table(), multiplier.table(), "multiplication");
        const auto deg = multiplier.homogeneous_degree();
        if (!deg) throw std::invalid_argument("multiplication: multiplier must be nonzero homogeneous");
        return GradedLinearMap(Kind::multiplication, ring, ring, {}, std::move(multiplier), *deg);
    }

    Kind kind() const noexcept { return kind_; }
    int degree_shift() const noexcept { return shift_; }
    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }

    /// Image of an element, as a normal form in the target.
    PolyGF2 apply(const PolyGF2& p) const {
        if (kind_ == Kind::multiplication) return target_->normal_form(*multiplier_ * p);
        return target_->normal_form(substitute(p, target_->table_ptr(), images_));
    }

    const BitMatrix& matrix(int degree) const {
        auto it = cache_.find(degree);
        if (it != cache_.end()) return it->second;
        const auto& src = source_->standard_monomials(degree);
        const auto& dst = target_->standard_monomials(degree + shift_);
        BitMatrix m(src.size(), dst.size());
        for (std::size_t r = 0; r < src.size(); ++r) {
            const PolyGF2 img = apply(PolyGF2::from_monomial(source_->table_ptr(), src[r]));
            for (const auto& term : img.terms()) {
                const auto c = target_->standard_index(degree + shift_, term);
                if (!c) throw std::logic_error("GradedLinearMap: normal form is not standard");
                m.set(r, *c);
            }
        }
        return cache_.emplace(degree, std::move(m)).first->second;
    }

    /// Basis of the kernel at one degree, as polynomials over the source
    /// standard basis.
    std::vector<PolyGF2> kernel(int degree) const {
        const auto vecs = matrix(degree).transposed().kernel_basis();
        return vectors_to_polys(vecs, degree);
    }

    std::vector<PolyGF2> vectors_to_polys(const std::vector<std::vector<bool>>& vecs,
                                          int degree) const {
        const auto& src = source_->standard_monomials(degree);
        std::vector<PolyGF2> out;
        for (const auto& v : vecs) {
            std::vector<Monomial> terms;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i]) terms.push_back(src[i]);
            out.push_back(PolyGF2::from_terms(source_->table_ptr(), std::move(terms)));
        }
        return out;
    }

private:
    GradedLinearMap(Kind kind, RingPtr source, RingPtr target, std::vector<PolyGF2> images,
                    std::optional<PolyGF2> multiplier, int shift)
        : kind_(kind), source_(std::move(source)), target_(std::move(target)),
          images_(std::move(images)), multiplier_(std::move(multiplier)), shift_(shift) {}

    Kind kind_;
    RingPtr source_, target_;
    std::vector<PolyGF2> images_;
    std::optional<PolyGF2> multiplier_;
    int shift_;
    mutable std::map<int, BitMatrix> cache_;
};

enum class RestrictionKind { i_star, j_star };

/// i*: same generator set, w_r -> w_r. j*: the source has one extra top
/// generator which maps to zero, w_r -> w_r otherwise.
inline GradedLinearMap restriction_map(RestrictionKind kind, RingPtr source, RingPtr target) {
    const auto& st = source->table();
    const auto& tt = target->table();
    std::vector<PolyGF2> images;
    if (kind == RestrictionKind::i_star) {
        if (!(st == tt))
            throw std::invalid_argument("restriction_map(i-star): generator degree mismatch");
        for (std::size_t i = 0; i < tt.size(); ++i)
            images.push_back(PolyGF2::variable(target->table_ptr(), tt.var(i).name));
    } else {
        if (st.size() != tt.size() + 1)
            throw std::invalid_argument("restriction_map(j-star): source needs one extra generator");
        for (std::size_t i = 0; i < tt.size(); ++i) {
            if (st.var(i).name != tt.var(i).name || st.var(i).degree != tt.var(i).degree)
                throw std::invalid_argument("restriction_map(j-star): generator degree mismatch");
            images.push_back(PolyGF2::variable(target->table_ptr(), tt.var(i).name));
        }
        images.push_back(PolyGF2::zero(target->table_ptr()));
    }
    return GradedLinearMap::ring_hom(std::move(source), std::move(target), std::move(images));
}

/// Multiplication by w1 on a Borel ring; degree shift +1.
inline GradedLinearMap mult_w1(RingPtr ring) {
    if (!ring->table().index_of("w1"))
        throw std::invalid_argument("mult_w1: ring has no variable w1");
    auto w1 = PolyGF2::variable(ring->table_ptr(), "w1");
    return GradedLinearMap::multiplication(std::move(ring), std::move(w1));
}

/// Basis of ker(f) ∩ ker(g) at one degree, computed by stacking the two
/// matrices and taking the null space. Both maps must share a source ring.
inline std::vector<PolyGF2> kernel_intersection(const GradedLinearMap& f, const GradedLinearMap& g,
                                                int degree) {
    if (f.source().get() != g.source().get())
        throw std::invalid_argument("kernel_intersection: maps must share the source ring");
    const BitMatrix stacked =
        BitMatrix::vstack(f.matrix(degree).transposed(), g.matrix(degree).transposed());
    return f.vectors_to_polys(stacked.kernel_basis(), degree);
}

/// Mod-2 Betti numbers of the oriented Grassmannian predicted from the Gysin
/// sequence of the double cover: the Borel ring and the w1-multiplication
/// alone, with no reference to the oriented presentations. Exactness gives
///   dim H^r(G~) = 2 dim H^r(G) - rank(w1 at r-1) - rank(w1 at r).
inline std::vector<std::size_t> gysin_dims(const RingPtr& borel, int up_to) {
    if (up_to < 0) throw std::invalid_argument("gysin_dims: up_to must be >= 0");
    if (borel->is_sealed() && borel->sealed_to() < up_to + 1)
        throw std::invalid_argument("gysin_dims: ring sealed below up_to+1");
    const GradedLinearMap w1 = mult_w1(borel);
    std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d) rank[static_cast<std::size_t>(d)] = w1.matrix(d).rank();
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d) {
        const std::size_t h = borel->standard_monomials(d).size();
        const std::size_t prev = d ? rank[static_cast<std::size_t>(d) - 1] : 0;
        out.push_back(2 * h - prev - rank[static_cast<std::size_t>(d)]);
    }
    return out;
}

inline std::vector<std::size_t> gysin_dims(int n, int k, int up_to) {
    auto ring = borel_ring(n, k);
    ring->seal(up_to + 1);
    return gysin_dims(ring, up_to);
}

}  // namespace grasschar
