#pragma once

#include <random>
#include <string>

#include "dickson/doubling.hpp"
#include "dickson/hilbert.hpp"

namespace dickson {

// ---------------------------------------------------------------------------
// derivations
// ---------------------------------------------------------------------------

/// Basis of the derivation Lie algebra plus its bracket structure constants.
struct DerivationAlgebra {
    AlgebraPtr alg;
    std::vector<Matrix> basis;                 // n x n matrices, Leibniz-verified
    Subspace space;                            // the same basis, matrices flattened row-major
    std::vector<std::vector<Vec>> bracket;     // bracket[i][j] = coords of [D_i, D_j]

    std::size_t dim() const { return basis.size(); }

    bool contains(const Matrix& d) const { return space.contains(d.vec()); }

    /// Coordinates of a span member read off the RREF pivots.
    Vec coords(const Matrix& d) const {
        Vec v = d.vec();
        Vec out;
        out.reserve(basis.size());
        for (std::size_t i = 0; i < space.pivots.size(); ++i) out.push_back(v[space.pivots[i]]);
        return out;
    }
};

inline bool leibniz_holds(const Algebra& a, const Matrix& d) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = d.apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
            Vec rhs = a.mul(d.col(i), a.basis_vec(j));
            Vec rhs2 = a.mul(a.basis_vec(i), d.col(j));
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (lhs[k] != rhs[k] + rhs2[k]) return false;
        }
    return true;
}

/// Full derivation space: nullspace of the linear system D(e_i e_j) =
/// D(e_i) e_j + e_i D(e_j) over all basis pairs, rows in lexicographic
/// (i, j, output coordinate) order. Unknown D_{ab} has index a*n + b.
inline Matrix derivation_system(const Algebra& a) {
    std::size_t n = a.dim();
    Matrix sys(a.field(), n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t out = 0; out < n; ++out, ++row) {
                for (std::size_t b = 0; b < n; ++b) {
                    // + D_{out,b} (e_i e_j)_b
                    sys.at(row, out * n + b) = sys.at(row, out * n + b) + a.c(i, j, b);
                    // - (D(e_i) e_j)_out = - sum_b c_{bj}^out D_{b,i}
                    sys.at(row, b * n + i) = sys.at(row, b * n + i) - a.c(b, j, out);
                    // - (e_i D(e_j))_out = - sum_b c_{ib}^out D_{b,j}
                    sys.at(row, b * n + j) = sys.at(row, b * n + j) - a.c(i, b, out);
                }
            }
        }
    return sys;
}

inline DerivationAlgebra derivations(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    Subspace sol = nullspace(derivation_system(*a));
    DerivationAlgebra der{a, {}, sol, {}};
    for (std::size_t r = 0; r < sol.dim(); ++r) {
        Matrix d = Matrix::from_vec(a->field(), n, n, sol.basis.row(r));
        if (!leibniz_holds(*a, d)) throw Error("derivation solver produced a non-derivation");
        der.basis.push_back(std::move(d));
    }
    std::size_t m = der.basis.size();
    der.bracket.assign(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix br = der.basis[i] * der.basis[j] - der.basis[j] * der.basis[i];
            if (!der.contains(br)) throw ClosureFailure();
            der.bracket[i][j] = der.coords(br);
        }
    return der;
}

struct LieDiagnostics {
    std::size_t dim = 0, derived_dim = 0, center_dim = 0;
    bool abelian = true;

    bool operator==(const LieDiagnostics&) const = default;
};

inline LieDiagnostics lie_diagnostics(const DerivationAlgebra& der) {
    std::size_t m = der.dim();
    const FieldSpec& f = der.alg->field();
    std::size_t n2 = der.alg->dim() * der.alg->dim();
    SpanBuilder derived(f, n2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            derived.add((der.basis[i] * der.basis[j] - der.basis[j] * der.basis[i]).vec());
    // center: coefficients x with sum_k x_k [D_k, D_j] = 0 for all j
    std::size_t center_dim = m;
    if (m > 0) {
        Matrix sys(f, m * n2, m);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vec br = (der.basis[k] * der.basis[j] - der.basis[j] * der.basis[k]).vec();
                for (std::size_t t = 0; t < n2; ++t) sys.at(j * n2 + t, k) = br[t];
            }
        center_dim = nullspace(sys).dim();
    }
    return {m, derived.dim(), center_dim, derived.dim() == 0};
}

enum class DerSubset { All, Derived };

inline std::vector<Matrix> derivation_subset(const DerivationAlgebra& der, DerSubset subset) {
    if (subset == DerSubset::All) return der.basis;
    std::size_t n = der.alg->dim();
    SpanBuilder derived(der.alg->field(), n * n);
    for (std::size_t i = 0; i < der.dim(); ++i)
        for (std::size_t j = i + 1; j < der.dim(); ++j)
            derived.add((der.basis[i] * der.basis[j] - der.basis[j] * der.basis[i]).vec());
    std::vector<Matrix> out;
    Subspace s = derived.subspace();
    for (std::size_t r = 0; r < s.dim(); ++r)
        out.push_back(Matrix::from_vec(der.alg->field(), n, n, s.basis.row(r)));
    return out;
}

/// {x : D(x) = 0 for every D in the chosen set}
inline Subspace common_kernel(const DerivationAlgebra& der, DerSubset subset) {
    std::size_t n = der.alg->dim();
    std::vector<Matrix> ops = derivation_subset(der, subset);
    Matrix stacked(der.alg->field(), 0, n);
    for (const Matrix& d : ops) stacked = stack_rows(stacked, d);
    return nullspace(stacked);
}

/// Smallest subspace containing seed and stable under every operator in the
/// chosen set.
inline Subspace module_spin(const DerivationAlgebra& der, const AlgElement& seed, DerSubset subset) {
    std::size_t n = der.alg->dim();
    std::vector<Matrix> ops = derivation_subset(der, subset);
    SpanBuilder span(der.alg->field(), n);
    span.add(seed.coeff);
    bool grew = true;
    while (grew) {
        grew = false;
        Subspace snapshot = span.subspace();
        for (const Matrix& op : ops)
            for (std::size_t r = 0; r < snapshot.dim(); ++r)
                if (span.add(op.apply(snapshot.basis.row(r)))) grew = true;
    }
    return span.subspace();
}

// ---------------------------------------------------------------------------
// division certificates and probes
// ---------------------------------------------------------------------------

enum class DivisionVerdict { Division, NotDivision, ProbabilisticNoWitness };

inline std::string verdict_name(DivisionVerdict v) {
    switch (v) {
        case DivisionVerdict::Division: return "division";
        case DivisionVerdict::NotDivision: return "not_division";
        case DivisionVerdict::ProbabilisticNoWitness: return "probabilistic_no_witness";
    }
    return "?";
}

struct DivisionCertificate {
    DivisionVerdict verdict;
    std::string reason;
    std::optional<std::pair<AlgElement, AlgElement>> witness;  // x, y != 0 with xy = 0
    long trials = 0;
    std::uint64_t seed = 0;

    void verify_witness() const {
        if (verdict != DivisionVerdict::NotDivision) return;
        if (!witness || witness->first.is_zero() || witness->second.is_zero() ||
            !(witness->first * witness->second).is_zero())
            throw Error("division certificate witness does not re-verify");
    }
};

/// Seeded random search for zero divisors. Per-trial randomness is derived
/// from (seed, trial index), so results are reproducible and order-free.
inline DivisionCertificate zero_divisor_probe(const AlgebraPtr& a, long trials, std::uint64_t seed,
                                              std::vector<std::int64_t> pool = {-3, -2, -1, 1, 2, 3}) {
    if (trials < 1) throw Error("trials must be >= 1");
    std::size_t n = a->dim();
    bool doubled = a->doubling().has_value();
    std::size_t half = n / 2;

    // over GF(p)(t) the integer pool collapses onto the prime field, so draw
    // low-degree polynomials there instead
    auto draw = [&](std::mt19937_64& rng) {
        const FieldSpec& f = a->field();
        if (f.kind != FieldKind::RationalFunctionField)
            return FieldValue::integer(f, pool[rng() % pool.size()]);
        std::vector<std::int64_t> cs(1 + rng() % 3);
        for (auto& c : cs) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.p));
        return FieldValue::ratfun(f, RatFun(GfPoly(f.p, std::move(cs)), GfPoly::constant(f.p, 1)));
    };

    auto sample = [&](std::mt19937_64& rng, bool force_both_halves) {
        while (true) {
            Vec v(n, FieldValue::integer(a->field(), 0));
            for (std::size_t i = 0; i < n; ++i) v[i] = draw(rng);
            AlgElement x(a, std::move(v));
            if (x.is_zero()) continue;
            if (force_both_halves) {
                bool lo = false, hi = false;
                for (std::size_t i = 0; i < half; ++i) lo |= !x.coeff[i].is_zero();
                for (std::size_t i = half; i < n; ++i) hi |= !x.coeff[i].is_zero();
                if (!lo || !hi) continue;
            }
            return x;
        }
    };

    // the norm-quotient dichotomy check from the quaternion division proof:
    // c = N(u/v) is impossible when c lies outside F
    bool structured = false;
    AlgElement c_elt;
    AlgebraPtr base;
    if (doubled) {
        base = a->doubling()->base;
        c_elt = AlgElement(base, a->doubling()->scalar);
        structured = base->involution().has_value() && !is_scalar(c_elt);
    }
    long structured_checks = 0;

    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(t + 1));
        bool force = doubled && (rng() & 1);
        AlgElement x = sample(rng, force);
        AlgElement y = sample(rng, force);
        if ((x * y).is_zero()) {
            DivisionCertificate cert{DivisionVerdict::NotDivision,
                                     "zero-divisor witness found at trial " + std::to_string(t),
                                     std::make_pair(x, y), trials, seed};
            cert.verify_witness();
            return cert;
        }
        // a random partner almost never lands in the annihilator of a zero
        // divisor, so when L_x is singular take the partner from its kernel.
        // Over Q, screen with a cheap mod-p rank first: nonsingular mod p
        // certifies nonsingular over Q, and the exact kernel runs only on the
        // rare flagged trials.  The check runs every fourth trial to keep
        // large-dimension probes fast.
        if (t % 4 != 0) continue;
        Matrix lx = mult_matrix(x, Side::Left);
        bool maybe_singular = true;
        if (a->field().kind == FieldKind::Rationals) {
            constexpr std::int64_t screen_p = 1000003;
            FieldSpec fp = FieldSpec::prime_field(screen_p);
            Matrix red(fp, n, n);
            bool reducible = true;
            for (std::size_t i = 0; reducible && i < n; ++i)
                for (std::size_t j = 0; reducible && j < n; ++j) {
                    const BigRat& q = lx.at(i, j).rat();
                    if (denominator(q) % screen_p == 0) reducible = false;
                    else
                        red.at(i, j) = FieldValue::from_bigint(fp, numerator(q)) /
                                       FieldValue::from_bigint(fp, denominator(q));
                }
            if (reducible && rank(red) == n) maybe_singular = false;
        }
        Subspace ker = maybe_singular ? nullspace(lx) : Subspace{};
        if (ker.dim() > 0) {
            AlgElement y2(a, ker.basis.row(0));
            DivisionCertificate cert{DivisionVerdict::NotDivision,
                                     "left multiplication by a sampled element is singular "
                                     "(trial " + std::to_string(t) + ")",
                                     std::make_pair(x, y2), trials, seed};
            cert.verify_witness();
            return cert;
        }
        if (structured && t % 64 == 0) {
            Vec uc(base->dim(), FieldValue::integer(a->field(), 0)),
                vc(base->dim(), FieldValue::integer(a->field(), 0));
            for (std::size_t i = 0; i < base->dim(); ++i) {
                uc[i] = draw(rng);
                vc[i] = draw(rng);
            }
            AlgElement u(base, uc), v(base, vc);
            if (!v.is_zero() && is_invertible(v)) {
                try {
                    FieldValue nw = norm(u * inverse(v));
                    if (nw * AlgElement::unit(base) == c_elt)
                        throw Error("norm quotient hit the scalar c although c is outside F");
                    ++structured_checks;
                } catch (const NonScalarInvolution&) {
                    structured = false;  // base involution is not scalar; skip the check
                }
            }
        }
    }
    return {DivisionVerdict::ProbabilisticNoWitness,
            "no witness in " + std::to_string(trials) + " trials (seed " + std::to_string(seed) +
                ", " + std::to_string(structured_checks) + " norm-quotient checks)",
            std::nullopt, trials, seed};
}

/// Tonelli-Shanks square root mod an odd prime; a must be a QR.
inline std::int64_t sqrt_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p % 4 == 3) return gf_pow(a, (p + 1) / 4, p);
    std::int64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (gf_scalar_is_square(z, p)) ++z;
    std::int64_t m = s, c = gf_pow(z, q, p), t = gf_pow(a, q, p), r = gf_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        std::int64_t b = gf_pow(c, std::int64_t{1} << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

namespace detail {

/// Nonzero norm-zero element of a quaternion algebra over a finite field
/// (always exists: Wedderburn).
inline AlgElement finite_quaternion_isotropic(const AlgebraPtr& q) {
    const FieldSpec& f = q->field();
    std::int64_t p = f.p;
    if (q->kind() == "quaternion") {
        const FieldValue &a = q->params()[0], &b = q->params()[1];
        // solve x0^2 = a x1^2 + b, set (x0, x1, 1, 0)
        for (std::int64_t x1 = 0; x1 < p; ++x1) {
            FieldValue s = a * FieldValue::integer(f, x1) * FieldValue::integer(f, x1) + b;
            if (!fe_is_square(s)) continue;
            std::int64_t x0 = sqrt_mod(s.res(), p);
            AlgElement u(q, {FieldValue::integer(f, x0), FieldValue::integer(f, x1),
                             FieldValue::integer(f, 1), FieldValue::integer(f, 0)});
            if (!u.is_zero() && norm(u).is_zero()) return u;
        }
    }
    // small-field fallback: exhaust coefficient tuples
    if (p <= 31) {
        std::size_t n = q->dim();
        std::vector<std::int64_t> idx(n, 0);
        while (true) {
            Vec v;
            for (std::int64_t k : idx) v.push_back(FieldValue::integer(f, k));
            AlgElement u(q, std::move(v));
            if (!u.is_zero() && norm(u).is_zero()) return u;
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == p) idx[pos++] = 0;
            if (pos == n) break;
        }
    }
    throw UnsupportedBase("no isotropic element found in finite quaternion base");
}

/// Small-box search for a rational norm-zero element of a split (a,b)_Q.
inline std::optional<AlgElement> rational_quaternion_isotropic(const AlgebraPtr& q) {
    const FieldSpec& f = q->field();
    for (std::int64_t bound = 1; bound <= 12; ++bound) {
        for (std::int64_t x0 = 0; x0 <= bound; ++x0)
            for (std::int64_t x1 = -bound; x1 <= bound; ++x1)
                for (std::int64_t x2 = -bound; x2 <= bound; ++x2)
                    for (std::int64_t x3 = -bound; x3 <= bound; ++x3) {
                        if (std::max({std::abs(x0), std::abs(x1), std::abs(x2), std::abs(x3)}) != bound)
                            continue;
                        AlgElement u(q, {FieldValue::integer(f, x0), FieldValue::integer(f, x1),
                                         FieldValue::integer(f, x2), FieldValue::integer(f, x3)});
                        if (!u.is_zero() && norm(u).is_zero()) return u;
                    }
    }
    return std::nullopt;
}

inline DivisionCertificate witness_from_isotropic(const AlgebraPtr& doubled, const AlgElement& u,
                                                  const std::string& reason) {
    // u sigma(u) = N(u) = 0, so ((u,0), (sigma(u),0)) is a zero-divisor pair
    AlgElement ubar = involution_apply(u);
    std::size_t n = u.alg->dim();
    Vec x(2 * n, FieldValue::integer(u.alg->field(), 0)), y = x;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = u.coeff[i];
        y[i] = ubar.coeff[i];
    }
    DivisionCertificate cert{DivisionVerdict::NotDivision, reason,
                             std::make_pair(AlgElement(doubled, x), AlgElement(doubled, y)), 0, 0};
    cert.verify_witness();
    return cert;
}

}  // namespace detail

/// Certificate-grade division decision for the covered base types:
/// quaternion over Q (Hilbert symbol), octonion over Q with a,b,e < 0
/// (norm non-square criterion), or any finite base field (Wedderburn).
inline DivisionCertificate division_certificate(const DoublingSpec& spec) {
    const AlgebraPtr& base = spec.base;
    const FieldSpec& f = base->field();
    AlgebraPtr doubled = dickson_double(spec);

    if (f.kind == FieldKind::PrimeField) {
        if (base->kind() != "quaternion" && base->kind() != "quaternion2")
            throw UnsupportedBase("finite-field certificate covers quaternion bases only");
        AlgElement u = detail::finite_quaternion_isotropic(base);
        return detail::witness_from_isotropic(
            doubled, u, "finite base field: quaternion algebra is split (Wedderburn)");
    }

    if (f.kind != FieldKind::Rationals)
        throw UnsupportedBase("certificate covers Q and finite prime fields; use zero_divisor_probe");

    if (is_scalar(spec.scalar))
        throw UnsupportedBase("scalar lies in F*1: classical doubling, not covered");

    if (base->kind() == "quaternion") {
        const FieldValue &a = base->params()[0], &b = base->params()[1];
        int h = hilbert_symbol_q(a, b);
        if (h == -1)
            return {DivisionVerdict::Division,
                    "hilbert symbol (" + a.str() + "," + b.str() + ") = -1 and c not in F",
                    std::nullopt, 0, 0};
        auto u = detail::rational_quaternion_isotropic(base);
        if (!u) throw UnsupportedBase("split quaternion base but no small isotropic witness found");
        return detail::witness_from_isotropic(doubled, *u,
                                              "hilbert symbol +1: base is split, zero divisors persist");
    }

    if (base->kind() == "octonion") {
        const Vec& pr = base->params();
        for (const FieldValue& x : pr)
            if (!(x.rat() < 0))
                throw UnsupportedBase("octonion certificate needs a,b,e < 0 (definite norm)");
        FieldValue nc = norm(spec.scalar);
        if (!fe_is_square(nc))
            return {DivisionVerdict::Division, "norm(c) = " + nc.str() + " is not a square",
                    std::nullopt, 0, 0};
        throw UnsupportedBase("norm(c) is a square: sufficient criterion inconclusive");
    }

    throw UnsupportedBase("base kind '" + base->kind() + "' not covered by the certificate");
}

}  // namespace dickson
