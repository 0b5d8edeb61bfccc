#pragma once

#include <utility>

#include "dickson/algebra.hpp"

namespace dickson {

// ---------------------------------------------------------------------------
// quaternion algebras
// ---------------------------------------------------------------------------

namespace detail {

inline AlgebraPtr build(FieldSpec field, std::vector<std::string> labels,
                        const std::vector<std::vector<Vec>>& table,
                        std::optional<Matrix> involution, std::optional<DoublingInfo> doubling,
                        std::string kind, Vec params) {
    std::size_t n = labels.size();
    Vec tensor;
    tensor.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) tensor.push_back(table[i][j][k]);
    return std::make_shared<Algebra>(std::move(field), std::move(labels), std::move(tensor), 0,
                                     std::move(involution), std::move(doubling), std::move(kind),
                                     std::move(params));
}

}  // namespace detail

/// (a,b)_F with basis {1,i,j,k}: i^2 = a, j^2 = b, ij = k = -ji.
/// Canonical involution fixes 1 and negates i, j, k.
inline AlgebraPtr make_quaternion(const FieldSpec& field, const FieldValue& a, const FieldValue& b) {
    if (field.characteristic() == 2) throw CharTwoField();
    if (a.is_zero() || b.is_zero()) throw ZeroParameter();
    auto fv = [&](std::int64_t n) { return FieldValue::integer(field, n); };
    auto e = [&](std::size_t k, const FieldValue& f) {
        Vec v(4, fv(0));
        v[k] = f;
        return v;
    };
    FieldValue one = fv(1), ab = a * b;
    std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4));
    t[0][0] = e(0, one); t[0][1] = e(1, one); t[0][2] = e(2, one); t[0][3] = e(3, one);
    t[1][0] = e(1, one); t[1][1] = e(0, a);   t[1][2] = e(3, one); t[1][3] = e(2, a);
    t[2][0] = e(2, one); t[2][1] = e(3, -one); t[2][2] = e(0, b);  t[2][3] = e(1, -b);
    t[3][0] = e(3, one); t[3][1] = e(2, -a);  t[3][2] = e(1, b);   t[3][3] = e(0, -ab);
    Matrix sigma(field, 4, 4);
    sigma.at(0, 0) = one;
    for (std::size_t k = 1; k < 4; ++k) sigma.at(k, k) = -one;
    return detail::build(field, {"1", "i", "j", "k"}, t, sigma, std::nullopt, "quaternion", {a, b});
}

/// [a,b) in characteristic 2, basis {1,i,j,ij}: i^2 = a + i, j^2 = b, ij = ji + j.
/// Canonical involution: sigma(i) = 1 + i, sigma(j) = j, sigma(ij) = ij.
inline AlgebraPtr make_quaternion_char2(const FieldSpec& field, const FieldValue& a,
                                        const FieldValue& b) {
    if (field.characteristic() != 2) throw WrongCharacteristic("[a,b) requires characteristic 2");
    if (b.is_zero()) throw ZeroParameter();
    auto fv = [&](std::int64_t n) { return FieldValue::integer(field, n); };
    FieldValue one = fv(1), zero = fv(0), ab = a * b;
    auto e = [&](std::initializer_list<FieldValue> cs) { return Vec(cs); };
    std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4));
    // rows: left factor 1, i, j, ij; columns: right factor
    t[0][0] = e({one, zero, zero, zero});
    t[0][1] = e({zero, one, zero, zero});
    t[0][2] = e({zero, zero, one, zero});
    t[0][3] = e({zero, zero, zero, one});
    t[1][0] = e({zero, one, zero, zero});
    t[1][1] = e({a, one, zero, zero});        // i*i = a + i
    t[1][2] = e({zero, zero, zero, one});     // i*j = ij
    t[1][3] = e({zero, zero, a, one});        // i*ij = a j + ij
    t[2][0] = e({zero, zero, one, zero});
    t[2][1] = e({zero, zero, one, one});      // j*i = j + ij
    t[2][2] = e({b, zero, zero, zero});       // j*j = b
    t[2][3] = e({b, b, zero, zero});          // j*ij = b + b i
    t[3][0] = e({zero, zero, zero, one});
    t[3][1] = e({zero, zero, a, zero});       // ij*i = a j
    t[3][2] = e({zero, b, zero, zero});       // ij*j = b i
    t[3][3] = e({ab, zero, zero, zero});      // (ij)^2 = ab
    Matrix sigma(field, 4, 4);
    sigma.at(0, 0) = one;
    sigma.at(0, 1) = one;  // sigma(i) = 1 + i
    sigma.at(1, 1) = one;
    sigma.at(2, 2) = one;
    sigma.at(3, 3) = one;
    return detail::build(field, {"1", "i", "j", "ij"}, t, sigma, std::nullopt, "quaternion2", {a, b});
}

// ---------------------------------------------------------------------------
// quadratic etale algebras
// ---------------------------------------------------------------------------

/// Does x^2 + x = a have a root in the (characteristic-2) field of a?
/// Over GF(2)(t) the substitution r = n/e is GF(2)-linear in the coefficients
/// of n (Frobenius), so existence reduces to a small linear solve.
inline bool has_artin_schreier_root(const FieldValue& a) {
    if (a.spec().characteristic() != 2) throw WrongCharacteristic("Artin-Schreier needs char 2");
    if (a.is_zero()) return true;
    if (a.spec().kind == FieldKind::PrimeField) return a.res() == 0;

    const RatFun& f = a.fun();
    // a reduced root n/e forces den(a) = e^2; in GF(2)[t] a square has even
    // exponents only, with the same coefficient list
    GfPoly e(2, {});
    e.p = f.den.p;
    for (std::size_t k = 0; k < f.den.c.size(); ++k) {
        if (k % 2 == 1 && f.den.c[k] != 0) return false;
        if (k % 2 == 0) e.c.push_back(f.den.c[k]);
    }
    e.normalize();
    // solve n^2 + n e = num for n over GF(2)
    const GfPoly& m = f.num;
    FieldSpec gf2 = FieldSpec::prime_field(2);
    int nmax = std::max(m.degree(), e.degree()) + 1;  // safe degree bound
    int rows = std::max(2 * nmax, nmax + e.degree()) + 1;
    Matrix sys(gf2, rows, nmax + 1);
    for (int k = 0; k <= nmax; ++k) {
        GfPoly contrib = GfPoly(2, {});
        contrib.p = 2;
        contrib.c.assign(2 * k + 1, 0);
        contrib.c[2 * k] = 1;  // n_k t^{2k} from n^2
        GfPoly tk(2, {});
        tk.p = 2;
        tk.c.assign(k + 1, 0);
        tk.c[k] = 1;
        contrib = contrib + tk * e;  // n_k t^k e(t) from n e
        for (int d = 0; d <= contrib.degree(); ++d)
            sys.at(d, k) = FieldValue::residue(gf2, contrib.c[d]);
    }
    Vec rhs(rows, FieldValue::integer(gf2, 0));
    for (int d = 0; d <= m.degree(); ++d) rhs[d] = FieldValue::residue(gf2, m.c[d]);
    return solve(sys, rhs).has_value();
}

enum class EtaleKind { Split, AdjoinSqrt, AdjoinArtinSchreier };

/// 2-dimensional commutative associative algebra with canonical involution.
inline AlgebraPtr make_etale(const FieldSpec& field, EtaleKind kind,
                             std::optional<FieldValue> a = std::nullopt) {
    auto fv = [&](std::int64_t n) { return FieldValue::integer(field, n); };
    FieldValue one = fv(1), zero = fv(0);
    bool char2 = field.characteristic() == 2;
    std::string label = "w";
    FieldValue wsq_const = zero, wsq_lin = zero;  // w^2 = wsq_const + wsq_lin w
    FieldValue sig_const = zero, sig_lin = zero;  // sigma(w) = sig_const + sig_lin w
    FieldValue param = zero;

    switch (kind) {
        case EtaleKind::Split:
            if (!char2) {
                wsq_const = one;              // w^2 = 1
                sig_lin = -one;               // sigma(w) = -w
            } else {
                wsq_lin = one;                // w^2 = w (idempotent)
                sig_const = one;
                sig_lin = one;                // sigma(w) = 1 + w
            }
            break;
        case EtaleKind::AdjoinSqrt:
            if (char2) throw NotSeparable();
            if (!a || a->is_zero() || fe_is_square(*a)) throw ParameterIsSquare();
            label = "i";
            wsq_const = *a;                   // i^2 = a
            sig_lin = -one;
            param = *a;
            break;
        case EtaleKind::AdjoinArtinSchreier:
            if (!char2) throw WrongCharacteristic("Artin-Schreier needs char 2");
            if (!a || has_artin_schreier_root(*a))
                throw ParameterIsSquare("x^2 + x = a has a root; extension splits");
            label = "i";
            wsq_const = *a;                   // i^2 = a + i
            wsq_lin = one;
            sig_const = one;                  // sigma(i) = 1 + i
            sig_lin = one;
            param = *a;
            break;
    }

    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2));
    t[0][0] = {one, zero};
    t[0][1] = {zero, one};
    t[1][0] = {zero, one};
    t[1][1] = {wsq_const, wsq_lin};
    Matrix sigma(field, 2, 2);
    sigma.at(0, 0) = one;
    sigma.at(0, 1) = sig_const;
    sigma.at(1, 1) = sig_lin;
    std::string kind_name = kind == EtaleKind::Split ? "etale_split"
                            : kind == EtaleKind::AdjoinSqrt ? "etale_sqrt"
                                                            : "etale_artinschreier";
    return detail::build(field, {"1", label}, t, sigma, std::nullopt, kind_name,
                         kind == EtaleKind::Split ? Vec{} : Vec{param});
}

// ---------------------------------------------------------------------------
// generalized Cayley-Dickson doubling
// ---------------------------------------------------------------------------

struct DoublingSpec {
    AlgebraPtr base;
    AlgElement scalar;          // invertible element c of the base
    Placement placement = Placement::Left;
    bool alt_middle_star_bar = false;

    std::vector<std::string> warnings() const {
        std::vector<std::string> w;
        if (is_scalar(scalar)) w.push_back("scalar lies in F*1 (classical doubling)");
        else if (base->involution() && involution_apply(scalar) == scalar)
            w.push_back("sigma(c) = c (paper's standing hypothesis violated)");
        return w;
    }
};

/// Cayley-Dickson doubling with the chosen scalar placement. The resulting
/// 2n-dimensional algebra has basis (base, base*l), unit (1,0), and carries an
/// involution only in the classical-scalar case (char != 2), so that iterated
/// doubling builds octonions.
inline AlgebraPtr dickson_double(const DoublingSpec& spec) {
    const AlgebraPtr& base = spec.base;
    if (!base->involution()) throw NoInvolution();
    if (placement_starred(spec.placement) && base->is_associative())
        throw PlacementNeedsNonassociativeBase();
    if (!is_invertible(spec.scalar)) throw ScalarNotInvertible();

    std::size_t n = base->dim();
    const FieldSpec& field = base->field();
    const Vec c = spec.scalar.coeff;
    const Matrix& sigma = *base->involution();
    auto conj = [&](const Vec& v) { return sigma.apply(v); };
    auto mul = [&](const Vec& x, const Vec& y) { return base->mul(x, y); };
    auto add = [&](Vec x, const Vec& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] + y[i];
        return x;
    };

    // (u,v)(u',v') -> pair of base elements
    auto product = [&](const Vec& u, const Vec& v, const Vec& up, const Vec& vp) {
        Vec first = mul(u, up);
        Vec twist;
        switch (spec.placement) {
            case Placement::Left: twist = mul(c, mul(conj(vp), v)); break;
            case Placement::Middle: twist = mul(conj(vp), mul(c, v)); break;
            case Placement::Right: twist = mul(mul(conj(vp), v), c); break;
            case Placement::LeftStar: twist = mul(mul(c, conj(vp)), v); break;
            case Placement::MiddleStar:
                twist = spec.alt_middle_star_bar ? mul(mul(conj(vp), c), v)
                                                 : mul(conj(mul(vp, c)), v);
                break;
            case Placement::RightStar: twist = mul(conj(vp), mul(v, c)); break;
        }
        first = add(std::move(first), twist);
        Vec second = add(mul(vp, u), mul(v, conj(up)));
        return std::pair<Vec, Vec>(std::move(first), std::move(second));
    };

    std::size_t dim = 2 * n;
    auto zero = FieldValue::integer(field, 0);
    Vec zvec(n, zero);
    Vec tensor(dim * dim * dim, zero);
    auto half = [&](std::size_t m) { return m < n ? std::pair<Vec, bool>(base->basis_vec(m), true)
                                                  : std::pair<Vec, bool>(base->basis_vec(m - n), false); };
    for (std::size_t bi = 0; bi < dim; ++bi) {
        auto [xi, firsti] = half(bi);
        Vec u = firsti ? xi : zvec, v = firsti ? zvec : xi;
        for (std::size_t bj = 0; bj < dim; ++bj) {
            auto [xj, firstj] = half(bj);
            Vec up = firstj ? xj : zvec, vp = firstj ? zvec : xj;
            auto [f, s] = product(u, v, up, vp);
            for (std::size_t k = 0; k < n; ++k) {
                tensor[(bi * dim + bj) * dim + k] = f[k];
                tensor[(bi * dim + bj) * dim + n + k] = s[k];
            }
        }
    }

    std::vector<std::string> labels = base->labels();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& bl = base->labels()[i];
        labels.push_back(i == base->unit_index() ? "l" : bl + "l");
    }

    std::optional<Matrix> involution;
    if (is_scalar(spec.scalar) && field.characteristic() != 2) {
        // classical case: sigma_hat(u, v) = (sigma(u), -v)
        Matrix s(field, dim, dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.at(i, j) = sigma.at(i, j);
        for (std::size_t i = 0; i < n; ++i) s.at(n + i, n + i) = -FieldValue::integer(field, 1);
        involution = std::move(s);
    }

    DoublingInfo info{base, c, spec.placement, spec.alt_middle_star_bar};
    return std::make_shared<Algebra>(field, std::move(labels), std::move(tensor), 0,
                                     std::move(involution), std::move(info), "doubling", c);
}

/// Cay(F,a,b,e): iterated classical doubling of (a,b)_F by the scalar e.
inline AlgebraPtr make_octonion(const FieldSpec& field, const FieldValue& a, const FieldValue& b,
                                const FieldValue& e) {
    if (field.characteristic() == 2) throw CharTwoField();
    if (a.is_zero() || b.is_zero() || e.is_zero()) throw ZeroParameter();
    AlgebraPtr quat = make_quaternion(field, a, b);
    DoublingSpec spec{quat, e * AlgElement::unit(quat), Placement::Left};
    AlgebraPtr oct = dickson_double(spec);
    // re-tag: same tensor, octonion provenance
    std::size_t n = oct->dim();
    Vec tensor;
    tensor.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) tensor.push_back(oct->c(i, j, k));
    return std::make_shared<Algebra>(field, oct->labels(), std::move(tensor), 0, oct->involution(),
                                     oct->doubling(), "octonion", Vec{a, b, e});
}

}  // namespace dickson
