#pragma once

#include <string>
#include <utility>

#include "dickson/structure.hpp"

namespace dickson {

/// Linear map between equal-dimensional algebras, columns = images of basis
/// vectors. Whether it is multiplicative is decided by hom_check, not assumed.
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix matrix;
    std::string family = "custom";

    AlgElement operator()(const AlgElement& x) const {
        if (!x.alg->same_tensor_as(*source)) throw AlgebraMismatch();
        return AlgElement(target, matrix.apply(x.coeff));
    }
};

inline AlgebraMap identity_map(const AlgebraPtr& a) {
    return {a, a, Matrix::identity(a->field(), a->dim()), "identity"};
}

inline AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
    if (!g.target->same_tensor_as(*f.source)) throw AlgebraMismatch();
    return {g.source, f.target, f.matrix * g.matrix, f.family + " . " + g.family};
}

/// Exact unital homomorphism test over all basis pairs. On failure the
/// refuting pair of basis elements is reported through `witness`.
inline bool hom_check(const AlgebraMap& m,
                      std::pair<AlgElement, AlgElement>* witness = nullptr) {
    const AlgebraPtr& s = m.source;
    const AlgebraPtr& t = m.target;
    if (s->dim() != t->dim()) throw DimensionMismatch();
    if (!(s->field() == t->field())) throw FieldMismatch();
    AlgElement one(s, s->unit_vec());
    if (!(m(one) == AlgElement::unit(t))) {
        if (witness) *witness = {one, one};
        return false;
    }
    for (std::size_t i = 0; i < s->dim(); ++i)
        for (std::size_t j = 0; j < s->dim(); ++j) {
            AlgElement ei = AlgElement::basis(s, i), ej = AlgElement::basis(s, j);
            if (!(m(ei * ej) == m(ei) * m(ej))) {
                if (witness) *witness = {ei, ej};
                return false;
            }
        }
    return true;
}

inline bool is_bijective(const AlgebraMap& m) { return rank(m.matrix) == m.matrix.cols(); }

namespace detail {

inline Matrix block_diag2(const Matrix& p, const Matrix& q) {
    std::size_t n = p.rows();
    Matrix r(p.spec(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r.at(i, j) = p.at(i, j);
            r.at(n + i, n + j) = q.at(i, j);
        }
    return r;
}

inline DoublingSpec require_doubled(const AlgebraPtr& a) {
    if (!a->doubling()) throw Error("algebra is not a doubling");
    const DoublingInfo& d = *a->doubling();
    return {d.base, AlgElement(d.base, d.scalar), d.placement, d.alt_middle_star_bar};
}

}  // namespace detail

/// Scaling family: a base isomorphism g : D -> D' and m in F^x give
/// Cay_*(D, c) -> Cay_*(D', m^2 g(c)), (u, v) |-> (g(u), m^-1 g(v)).
/// Multiplicative by construction; asserted here.
inline AlgebraMap iso_scale(const AlgebraPtr& a, const AlgebraMap& g, const FieldValue& m) {
    DoublingSpec src = detail::require_doubled(a);
    if (!src.base->same_tensor_as(*g.source)) throw AlgebraMismatch();
    if (!hom_check(g) || !is_bijective(g)) throw BaseMapNotHomomorphism();
    if (m.is_zero()) throw ZeroArgument("scaling factor must be nonzero");
    AlgElement gc = g(src.scalar);
    AlgebraPtr target = dickson_double({g.target, (m * m) * gc, src.placement, src.alt_middle_star_bar});
    Matrix q(a->field(), g.target->dim(), g.target->dim());
    FieldValue minv = m.inv();
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) q.at(i, j) = minv * g.matrix.at(i, j);
    AlgebraMap out{a, target, detail::block_diag2(g.matrix, q), "scale"};
    if (!hom_check(out)) throw Error("scaling map failed the homomorphism check");
    return out;
}

/// Inner family over an associative base: candidates
///   (u, v) |-> (a u a^-1, z a v a^-1)         toward scalar d = N(z)^-1 a c a^-1
/// and with `conjugate` set the sigma-twisted variant
///   (u, v) |-> (a s(u) a^-1, z a s(v) a^-1)   toward d = N(z)^-1 a s(c) a^-1.
/// Not asserted: run hom_check on the result.
inline AlgebraMap iso_inner(const AlgebraPtr& a_alg, const AlgElement& a, const AlgElement& z,
                            bool conjugate = false,
                            std::optional<Placement> target_placement = std::nullopt) {
    DoublingSpec src = detail::require_doubled(a_alg);
    const AlgebraPtr& base = src.base;
    if (!a.alg->same_tensor_as(*base) || !z.alg->same_tensor_as(*base)) throw AlgebraMismatch();
    if (!is_invertible(a) || !is_invertible(z)) throw NotInvertible();
    if (!base->involution()) throw NoInvolution();

    AlgElement ainv = inverse(a);
    Matrix conj = mult_matrix(a, Side::Left) * mult_matrix(ainv, Side::Right);
    Matrix p = conj, q = mult_matrix(z * a, Side::Left) * mult_matrix(ainv, Side::Right);
    AlgElement c = src.scalar;
    if (conjugate) {
        const Matrix& s = *base->involution();
        p = p * s;
        q = q * s;
        c = involution_apply(c);
    }
    FieldValue nz = norm(z);
    if (nz.is_zero()) throw NotInvertible("z has zero norm");
    AlgElement d = nz.inv() * (a * c * ainv);
    AlgebraPtr target = dickson_double(
        {base, d, target_placement.value_or(src.placement), src.alt_middle_star_bar});
    return {a_alg, target, detail::block_diag2(p, q), conjugate ? "inner-conj" : "inner"};
}

/// Nonassociative quaternion family over an etale base K:
///   (u, v) |-> (u, z v)        toward N(z)^-1 c
///   (u, v) |-> (s(u), z s(v))  toward N(z)^-1 s(c)   (conjugate variant)
inline AlgebraMap iso_nonassoc_quat(const AlgebraPtr& a_alg, const AlgElement& z,
                                    bool conjugate = false) {
    DoublingSpec src = detail::require_doubled(a_alg);
    const AlgebraPtr& base = src.base;
    if (base->dim() != 2) throw UnsupportedBase("expected a two-dimensional etale base");
    if (!z.alg->same_tensor_as(*base)) throw AlgebraMismatch();
    if (!is_invertible(z)) throw NotInvertible();
    FieldValue nz = norm(z);
    if (nz.is_zero()) throw NotInvertible("z has zero norm");
    Matrix p = Matrix::identity(base->field(), 2);
    Matrix q = mult_matrix(z, Side::Left);
    AlgElement c = src.scalar;
    if (conjugate) {
        const Matrix& s = *base->involution();
        p = p * s;
        q = q * s;
        c = involution_apply(c);
    }
    AlgebraPtr target =
        dickson_double({base, nz.inv() * c, src.placement, src.alt_middle_star_bar});
    return {a_alg, target, detail::block_diag2(p, q), conjugate ? "quat-conj" : "quat-scale"};
}

/// Octonion-double family: g an automorphism (or isomorphism) of the octonion
/// base, m in F^x, target scalar m^2 g(c), map (u, v) |-> (g(u), m^-1 g(v)).
/// Multiplicative by construction; asserted here.
inline AlgebraMap iso_octonion_double(const AlgebraPtr& a, const AlgebraMap& g, const FieldValue& m) {
    DoublingSpec src = detail::require_doubled(a);
    if (src.base->kind() != "octonion") throw UnsupportedBase("expected an octonion base");
    AlgebraMap out = iso_scale(a, g, m);
    out.family = "octonion-double";
    return out;
}

/// The involutive automorphism (u, v) |-> (u, -v) of any doubling.
inline AlgebraMap half_negation(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    Matrix m = Matrix::identity(a->field(), n);
    for (std::size_t i = n / 2; i < n; ++i) m.at(i, i) = -m.at(i, i);
    return {a, a, std::move(m), "half-negation"};
}

/// Candidate map Cay_*(D, c) -> Cay_*(D^op, s(c)), (u, v) |-> (s(u), s(v)).
/// An isomorphism for some placements and an anti-pattern for others; run
/// hom_check to find out.
inline AlgebraMap sigma_twist(const AlgebraPtr& a) {
    DoublingSpec src = detail::require_doubled(a);
    const AlgebraPtr& base = src.base;
    if (!base->involution()) throw NoInvolution();
    AlgebraPtr op = opposite(base);
    AlgElement sc = involution_apply(src.scalar);
    AlgebraPtr target =
        dickson_double({op, AlgElement(op, sc.coeff), src.placement, src.alt_middle_star_bar});
    const Matrix& s = *base->involution();
    return {a, target, detail::block_diag2(s, s), "sigma-twist"};
}

// ---------------------------------------------------------------------------
// fingerprints
// ---------------------------------------------------------------------------

/// Isomorphism-invariant summary used to separate algebras. Optional entries
/// are omitted when not computed (large dimension) or not certificate-grade.
struct Fingerprint {
    std::size_t nuc_l = 0, nuc_m = 0, nuc_r = 0, nuc = 0, comm = 0, center = 0;
    std::optional<bool> third_power_assoc_at_l;
    std::optional<LieDiagnostics> der;
    std::optional<std::size_t> derived_kernel_dim;
    std::optional<std::string> division;

    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const AlgebraPtr& a, bool with_derivations = true,
                               bool with_division = true) {
    Fingerprint fp;
    fp.nuc_l = nucleus(a, NucleusPart::Left).dim();
    fp.nuc_m = nucleus(a, NucleusPart::Middle).dim();
    fp.nuc_r = nucleus(a, NucleusPart::Right).dim();
    fp.nuc = nucleus(a, NucleusPart::Full).dim();
    fp.comm = commuter(a).dim();
    fp.center = center(a).dim();
    if (a->doubling() || a->kind() == "opposite of doubling")
        fp.third_power_assoc_at_l =
            third_power_assoc_probe(AlgElement::basis(a, a->dim() / 2));
    if (with_derivations) {
        DerivationAlgebra der = derivations(a);
        fp.der = lie_diagnostics(der);
        fp.derived_kernel_dim = common_kernel(der, DerSubset::Derived).dim();
    }
    if (with_division) {
        if (a->doubling()) {
            try {
                DivisionCertificate cert = division_certificate(detail::require_doubled(a));
                fp.division = verdict_name(cert.verdict);
            } catch (const UnsupportedBase&) {
            }
        } else if (a->kind() == "quaternion" && a->field().kind == FieldKind::Rationals) {
            fp.division =
                hilbert_symbol_q(a->params()[0], a->params()[1]) == -1 ? "division" : "not_division";
        }
    }
    return fp;
}

}  // namespace dickson
