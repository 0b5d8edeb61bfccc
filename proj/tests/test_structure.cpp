#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dickson/structure.hpp"

using namespace dickson;

namespace {

const FieldSpec Q = FieldSpec::rationals();
FieldValue qi(std::int64_t n) { return FieldValue::integer(Q, n); }

AlgebraPtr quaternion_base() { return make_quaternion(Q, qi(-1), qi(-1)); }

AlgebraPtr dickson8(Placement p) {
    AlgebraPtr h = quaternion_base();
    return dickson_double({h, AlgElement::basis(h, 1), p, false});
}

AlgElement embed(const AlgebraPtr& doubled, const AlgElement& u, bool second) {
    std::size_t n = u.coeff.size();
    Vec v(doubled->dim(), FieldValue::integer(doubled->field(), 0));
    for (std::size_t i = 0; i < n; ++i) v[(second ? n : 0) + i] = u.coeff[i];
    return AlgElement(doubled, std::move(v));
}

/// (u,v) |-> (0, s v) on the doubling.
Matrix d0_matrix(const AlgebraPtr& doubled, const AlgElement& s) {
    std::size_t n = s.coeff.size();
    Matrix ls = mult_matrix(s, Side::Left);
    Matrix d(doubled->field(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.at(n + i, n + j) = ls.at(i, j);
    return d;
}

}  // namespace

TEST_CASE("derivation dimensions") {
    CHECK(derivations(quaternion_base()).dim() == 3);  // inner derivations of H

    AlgebraPtr k = make_etale(Q, EtaleKind::AdjoinSqrt, qi(-1));
    DerivationAlgebra der4 = derivations(dickson_double({k, AlgElement::basis(k, 1),
                                                         Placement::Left, false}));
    CHECK(der4.dim() == 1);
    LieDiagnostics d4 = lie_diagnostics(der4);
    CHECK(d4.abelian);
    CHECK(d4.derived_dim == 0);

    for (Placement p : {Placement::Left, Placement::Middle, Placement::Right}) {
        AlgebraPtr a = dickson8(p);
        DerivationAlgebra der = derivations(a);
        CHECK(lie_diagnostics(der) == LieDiagnostics{4, 3, 1, false});
        CHECK(derivations(opposite(a)).dim() == der.dim());
    }
}

TEST_CASE("leibniz identity is checkable") {
    AlgebraPtr a = dickson8(Placement::Left);
    DerivationAlgebra der = derivations(a);
    for (const Matrix& d : der.basis) CHECK(leibniz_holds(*a, d));
    Matrix not_der = Matrix::identity(Q, 8);
    CHECK_FALSE(leibniz_holds(*a, not_der));
}

TEST_CASE("D0 membership matches the placement conditions") {
    AlgebraPtr h = quaternion_base();
    AlgElement c = AlgElement::basis(h, 1);
    std::vector<AlgElement> svals;
    for (std::size_t b = 0; b < 4; ++b) svals.push_back(AlgElement::basis(h, b));
    svals.push_back(AlgElement::basis(h, 1) + AlgElement::basis(h, 2));
    svals.push_back(AlgElement::unit(h) + AlgElement::basis(h, 3));

    for (Placement p : {Placement::Left, Placement::Middle, Placement::Right}) {
        AlgebraPtr a = dickson_double({h, c, p, false});
        for (const AlgElement& s : svals) {
            bool cond = p == Placement::Middle
                            ? (c * s + involution_apply(s) * c).is_zero()
                            : (involution_apply(s) + s).is_zero();
            CHECK(leibniz_holds(*a, d0_matrix(a, s)) == cond);
        }
    }
}

TEST_CASE("derivations kill or move (c,0) as the placement dictates") {
    AlgebraPtr h = quaternion_base();
    AlgElement c = AlgElement::basis(h, 1);
    for (Placement p : {Placement::Left, Placement::Middle, Placement::Right}) {
        AlgebraPtr a = dickson_double({h, c, p, false});
        DerivationAlgebra der = derivations(a);
        Vec cvec = embed(a, c, false).coeff;
        Vec lvec = AlgElement::basis(a, 4).coeff;
        for (const Matrix& d : der.basis) {
            Vec dc = d.apply(cvec);
            Vec dl = d.apply(lvec);
            AlgElement r(h, Vec(dl.begin(), dl.begin() + 4));
            AlgElement s(h, Vec(dl.begin() + 4, dl.end()));
            // D(l) = (r, s) with sigma(s) = -s, sigma(r) = -r, rc = -sigma(rc)
            CHECK((involution_apply(s) + s).is_zero());
            CHECK((involution_apply(r) + r).is_zero());
            CHECK((r * c + involution_apply(r * c)).is_zero());
            if (p == Placement::Middle) {
                // D((c,0)) = (cs - sc, 0)
                AlgElement expect = c * s - s * c;
                CHECK(AlgElement(a, dc) == embed(a, expect, false));
            } else {
                for (const FieldValue& x : dc) CHECK(x.is_zero());
            }
        }
    }
}

TEST_CASE("module decomposition under the derived part, exact values") {
    // The derived (su(2)) part acts with kernel (B,0) and one irreducible
    // 4-dim module (0,B) for the left/right placements, and as 1+3+4 for the
    // middle one.  (The coarser su(2)+center invariants match the published
    // dimension claims; the decomposition itself is what the exact solver
    // yields, corroborated by the mod-p rank oracle.)
    for (Placement p : {Placement::Left, Placement::Right}) {
        AlgebraPtr a = dickson8(p);
        DerivationAlgebra der = derivations(a);
        Subspace kern = common_kernel(der, DerSubset::Derived);
        CHECK(kern.dim() == 4);
        for (std::size_t b = 0; b < 4; ++b)
            CHECK(kern.contains(AlgElement::basis(a, b).coeff));
        CHECK(module_spin(der, AlgElement::basis(a, 2), DerSubset::Derived).dim() == 1);
        Subspace mjl = module_spin(der, AlgElement::basis(a, 6), DerSubset::Derived);
        CHECK(mjl.dim() == 4);
        CHECK(intersect(kern, mjl).dim() == 0);
        // the 4-dim module is irreducible: any nonzero seed spins to all of it
        for (std::size_t b = 4; b < 8; ++b)
            CHECK(module_spin(der, AlgElement::basis(a, b), DerSubset::Derived).dim() == 4);
    }

    AlgebraPtr am = dickson8(Placement::Middle);
    DerivationAlgebra derm = derivations(am);
    Subspace kern = common_kernel(derm, DerSubset::Derived);
    CHECK(kern.dim() == 1);
    Subspace mj = module_spin(derm, AlgElement::basis(am, 2), DerSubset::Derived);
    Subspace mjl = module_spin(derm, AlgElement::basis(am, 6), DerSubset::Derived);
    CHECK(mj.dim() == 3);
    CHECK(mjl.dim() == 4);
    CHECK(intersect(mj, mjl).dim() == 0);
    CHECK(intersect(kern, mj).dim() == 0);
    CHECK(intersect(kern, mjl).dim() == 0);

    // the unit is killed by every derivation
    for (Placement p : {Placement::Left, Placement::Middle, Placement::Right}) {
        AlgebraPtr a = dickson8(p);
        CHECK(common_kernel(derivations(a), DerSubset::All)
                  .contains(AlgElement::unit(a).coeff));
    }
}

TEST_CASE("mod-p rank oracle corroborates the derivation solver") {
    AlgebraPtr a = dickson8(Placement::Left);
    Matrix sys = derivation_system(*a);
    DerivationAlgebra der = derivations(a);
    for (std::int64_t p : {10007LL, 65537LL}) {
        FieldSpec fp = FieldSpec::prime_field(p);
        Matrix rp(fp, sys.rows(), sys.cols());
        for (std::size_t i = 0; i < sys.rows(); ++i)
            for (std::size_t j = 0; j < sys.cols(); ++j) {
                const BigRat& q = sys.at(i, j).rat();
                REQUIRE(denominator(q) % p != 0);
                rp.at(i, j) = FieldValue::from_bigint(fp, numerator(q)) /
                              FieldValue::from_bigint(fp, denominator(q));
            }
        CHECK(sys.cols() - rank(rp) == der.dim());
    }
}

TEST_CASE("sqrt mod p recovers roots of quadratic residues") {
    for (std::int64_t p : {7LL, 13LL, 10007LL, 65537LL})
        for (std::int64_t x = 1; x < 25; ++x) {
            std::int64_t a = x * x % p;
            std::int64_t r = sqrt_mod(a, p);
            CHECK(r * r % p == a);
        }
    CHECK(sqrt_mod(0, 7) == 0);
}

TEST_CASE("zero divisor probe") {
    AlgebraPtr h = quaternion_base();
    AlgebraPtr a = dickson_double({h, AlgElement::basis(h, 1), Placement::Left, false});
    DivisionCertificate good = zero_divisor_probe(a, 2000, 99);
    CHECK(good.verdict == DivisionVerdict::ProbabilisticNoWitness);
    CHECK(good.trials == 2000);
    CHECK(good.seed == 99);

    AlgebraPtr hs = make_quaternion(Q, qi(1), qi(1));
    AlgebraPtr as = dickson_double({hs, AlgElement::basis(hs, 1), Placement::Left, false});
    DivisionCertificate bad = zero_divisor_probe(as, 2000, 99);
    REQUIRE(bad.verdict == DivisionVerdict::NotDivision);
    REQUIRE(bad.witness.has_value());
    CHECK((bad.witness->first * bad.witness->second).is_zero());
    CHECK_FALSE(bad.witness->first.is_zero());
    CHECK_FALSE(bad.witness->second.is_zero());
    bad.verify_witness();  // must not throw

    // determinism: same seed, same outcome
    DivisionCertificate again = zero_divisor_probe(as, 2000, 99);
    CHECK(again.witness->first == bad.witness->first);
    CHECK(again.witness->second == bad.witness->second);
}

TEST_CASE("division certificates") {
    AlgebraPtr h = quaternion_base();
    DivisionCertificate c1 = division_certificate({h, AlgElement::basis(h, 1),
                                                   Placement::Left, false});
    CHECK(c1.verdict == DivisionVerdict::Division);
    CHECK(c1.reason.find("hilbert") != std::string::npos);

    AlgebraPtr hs = make_quaternion(Q, qi(1), qi(1));
    DivisionCertificate c2 = division_certificate({hs, AlgElement::basis(hs, 1),
                                                   Placement::Left, false});
    REQUIRE(c2.verdict == DivisionVerdict::NotDivision);
    REQUIRE(c2.witness.has_value());
    c2.verify_witness();

    AlgebraPtr o = make_octonion(Q, qi(-1), qi(-1), qi(-1));
    AlgElement c16 = AlgElement::unit(o) + AlgElement::basis(o, 1);  // norm 2
    DivisionCertificate c3 = division_certificate({o, c16, Placement::Left, false});
    CHECK(c3.verdict == DivisionVerdict::Division);
    CHECK(c3.reason.find("not a square") != std::string::npos);

    // norm(3 + 2i + ... ) square, or scalar c: outside the certificate's scope
    CHECK_THROWS_AS(division_certificate({o, qi(3) * AlgElement::unit(o),
                                          Placement::Left, false}),
                    UnsupportedBase);
    CHECK_THROWS_AS(division_certificate({h, qi(-1) * AlgElement::unit(h),
                                          Placement::Left, false}),
                    UnsupportedBase);
}

TEST_CASE("finite fields never give division doublings") {
    for (std::int64_t p : {5LL, 10007LL}) {
        FieldSpec f = FieldSpec::prime_field(p);
        AlgebraPtr h = make_quaternion(f, FieldValue::integer(f, -1), FieldValue::integer(f, -1));
        DivisionCertificate cert = division_certificate({h, AlgElement::basis(h, 1),
                                                         Placement::Left, false});
        REQUIRE(cert.verdict == DivisionVerdict::NotDivision);
        REQUIRE(cert.witness.has_value());
        cert.verify_witness();
    }
}
