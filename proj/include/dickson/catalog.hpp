#pragma once

#include <algorithm>
#include <sstream>

#include "dickson/isomaps.hpp"

namespace dickson {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> tags;
    AlgebraPtr alg;  // null for pure check groups
    std::optional<Fingerprint> fp;
    std::optional<DivisionCertificate> cert;
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
};

struct CatalogReport {
    std::vector<CatalogEntry> entries;
    long trials = 0;
    std::uint64_t seed = 0;

    bool ok() const {
        return std::all_of(entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.ok(); });
    }
};

namespace catdetail {

inline void check(CatalogEntry& e, const std::string& name, bool pass, std::string detail = "") {
    e.checks.push_back({name, pass, std::move(detail)});
}

/// (u, 0) or (0, u) inside a doubling of u's algebra.
inline AlgElement embed(const AlgebraPtr& doubled, const AlgElement& u, bool second) {
    std::size_t n = u.coeff.size();
    Vec v(doubled->dim(), FieldValue::integer(doubled->field(), 0));
    for (std::size_t i = 0; i < n; ++i) v[(second ? n : 0) + i] = u.coeff[i];
    return AlgElement(doubled, std::move(v));
}

inline Fingerprint strip_division(Fingerprint f) {
    f.division.reset();
    return f;
}

/// Rational points on the norm-one circle of L = F(i) inside the quaternion
/// algebra: (1-t^2)/(1+t^2) + 2t/(1+t^2) i.
inline std::vector<AlgElement> norm_one_samples(const AlgebraPtr& h, std::size_t count) {
    const FieldSpec& f = h->field();
    std::vector<AlgElement> out;
    for (std::int64_t t = 1; out.size() < count; ++t) {
        FieldValue den = FieldValue::integer(f, 1 + t * t);
        FieldValue a = FieldValue::integer(f, 1 - t * t) / den;
        FieldValue b = FieldValue::integer(f, 2 * t) / den;
        out.push_back(a * AlgElement::unit(h) + b * AlgElement::basis(h, 1));
    }
    return out;
}

/// Invertible elements of L = F(i) inside the quaternion algebra.
inline std::vector<AlgElement> l_unit_samples(const AlgebraPtr& h, std::size_t count) {
    const FieldSpec& f = h->field();
    std::vector<AlgElement> out;
    for (std::int64_t x = 1; out.size() < count; ++x)
        for (std::int64_t y = -2; y <= 2 && out.size() < count; ++y)
            out.push_back(FieldValue::integer(f, x) * AlgElement::unit(h) +
                          FieldValue::integer(f, y) * AlgElement::basis(h, 1));
    return out;
}

inline std::vector<AlgElement> lj_samples(const AlgebraPtr& h, std::size_t count) {
    std::vector<AlgElement> out;
    for (const AlgElement& a : l_unit_samples(h, count))
        out.push_back(a * AlgElement::basis(h, 2));
    return out;
}

/// D0(u, v) = (0, s v) as a matrix on the doubling.
inline Matrix d0_matrix(const AlgebraPtr& doubled, const AlgElement& s) {
    std::size_t n = s.coeff.size();
    Matrix ls = mult_matrix(s, Side::Left);
    Matrix d(doubled->field(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.at(n + i, n + j) = ls.at(i, j);
    return d;
}

inline bool d0_condition(Placement p, const AlgElement& c, const AlgElement& s) {
    if (p == Placement::Middle) return (c * s + involution_apply(s) * c).is_zero();
    return (involution_apply(s) + s).is_zero();
}

/// Rational matrix reduced mod p; requires p to miss every denominator.
inline Matrix reduce_mod_p(const Matrix& m, std::int64_t p) {
    FieldSpec f = FieldSpec::prime_field(p);
    Matrix r(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigRat& q = m.at(i, j).rat();
            if (denominator(q) % p == 0) throw Error("prime divides a denominator");
            FieldValue num = FieldValue::from_bigint(f, numerator(q));
            FieldValue den = FieldValue::from_bigint(f, denominator(q));
            r.at(i, j) = num / den;
        }
    return r;
}

}  // namespace catdetail

/// The built-in example catalog with its expectations. `only` filters by
/// entry name or tag; empty runs everything.
inline CatalogReport run_catalog(const std::string& only = "", long trials = 10000,
                                 std::uint64_t seed = 12345) {
    using namespace catdetail;
    CatalogReport rep;
    rep.trials = trials;
    rep.seed = seed;

    auto want = [&](const std::string& name, const std::vector<std::string>& tags) {
        return only.empty() || only == name ||
               std::find(tags.begin(), tags.end(), only) != tags.end();
    };

    FieldSpec Q = FieldSpec::rationals();
    auto qi = [&](std::int64_t n) { return FieldValue::integer(Q, n); };
    AlgebraPtr H = make_quaternion(Q, qi(-1), qi(-1));
    AlgElement cH = AlgElement::basis(H, 1);  // i

    const Placement placements[3] = {Placement::Left, Placement::Middle, Placement::Right};
    AlgebraPtr A8[3];
    for (int k = 0; k < 3; ++k) A8[k] = dickson_double({H, cH, placements[k], false});

    // ---- 4-dim baselines ------------------------------------------------
    if (want("base_quaternion", {"base"})) {
        CatalogEntry e{"base_quaternion", {"base"}, H, fingerprint(H), std::nullopt, {}};
        check(e, "nucleus is everything (associative)", e.fp->nuc == 4);
        check(e, "division via hilbert symbol", e.fp->division == "division");
        check(e, "derivation algebra is sl2-sized", e.fp->der && e.fp->der->dim == 3 &&
                                                        e.fp->der->derived_dim == 3 &&
                                                        e.fp->der->center_dim == 0);
        rep.entries.push_back(std::move(e));
    }

    AlgebraPtr K = make_etale(Q, EtaleKind::AdjoinSqrt, qi(-1));
    AlgElement cK = AlgElement::basis(K, 1);
    AlgebraPtr A4 = dickson_double({K, cK, Placement::Left, false});
    if (want("base_nonassoc_quat", {"base"})) {
        CatalogEntry e{"base_nonassoc_quat", {"base"}, A4, fingerprint(A4), std::nullopt, {}};
        check(e, "dim Der = 1", e.fp->der && e.fp->der->dim == 1);
        bool shape = true;
        DerivationAlgebra der = derivations(A4);
        for (const Matrix& d : der.basis) {
            // must be (u,v) |-> (0, s v) with trace(s) = 0
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (!d.at(i, j).is_zero() && i < 2) shape = false;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    if (!d.at(i, j).is_zero()) shape = false;
            Vec sv = d.apply(embed(A4, AlgElement::unit(K), true).coeff);
            AlgElement s(K, Vec(sv.begin() + 2, sv.end()));
            if (!trace(s).is_zero()) shape = false;
            Matrix expect = d0_matrix(A4, s);
            if (!(expect == d)) shape = false;
        }
        check(e, "every derivation is (0,sv) with trace(s) = 0", shape);
        rep.entries.push_back(std::move(e));
    }

    // ---- the nine 8-dim variants ----------------------------------------
    std::optional<Fingerprint> nine_ref[3];
    bool nine_class_same[3] = {true, true, true};
    auto nine_track = [&](int k, const Fingerprint& fp) {
        Fingerprint s = strip_division(fp);
        if (!nine_ref[k]) nine_ref[k] = s;
        else if (!(s == *nine_ref[k])) nine_class_same[k] = false;
    };

    for (int k = 0; k < 3; ++k) {
        std::string pname = placement_name(placements[k]);
        if (want("dickson8_" + pname, {"8dim", "nine"})) {
            CatalogEntry e{"dickson8_" + pname, {"8dim", "nine"}, A8[k], fingerprint(A8[k]),
                           std::nullopt, {}};
            nine_track(k, *e.fp);

            AlgElement l = AlgElement::basis(A8[k], 4);
            AlgElement l2 = l * l;
            check(e, "l^2 = (c,0)", l2 == embed(A8[k], cH, false));
            check(e, "(l^2)l = (0,c)", l2 * l == embed(A8[k], cH, true));
            check(e, "l(l^2) = (0,sigma(c))",
                  l * l2 == embed(A8[k], involution_apply(cH), true));
            check(e, "not third-power associative at l",
                  e.fp->third_power_assoc_at_l == std::optional<bool>(false));
            check(e, "nucleus parts, commuter, center all dim 1",
                  e.fp->nuc_l == 1 && e.fp->nuc_m == 1 && e.fp->nuc_r == 1 && e.fp->nuc == 1 &&
                      e.fp->comm == 1 && e.fp->center == 1);
            check(e, "Der: dim 4, derived 3, center 1",
                  e.fp->der && *e.fp->der == LieDiagnostics{4, 3, 1, false});
            // Exact computation departs from Corollary 24's stated 1+1+3+3
            // decomposition: the derived (su(2)) part of Der has common kernel
            // (B,0) of dim 4 for the left/right placements (decomposition
            // 1+1+1+1+4) and F.1 of dim 1 for the middle one (1+3+4).
            std::size_t want_kern = placements[k] == Placement::Middle ? 1 : 4;
            check(e, "derived part common kernel dim " + std::to_string(want_kern),
                  e.fp->derived_kernel_dim == want_kern);
            check(e, "division certificate", e.fp->division == "division");

            // D0 = (0, s v) membership against the stated conditions
            std::vector<AlgElement> svals;
            for (std::size_t b = 0; b < 4; ++b) svals.push_back(AlgElement::basis(H, b));
            svals.push_back(AlgElement::unit(H) + AlgElement::basis(H, 1));
            svals.push_back(AlgElement::basis(H, 1) + AlgElement::basis(H, 2));
            svals.push_back(AlgElement::basis(H, 2) + qi(2) * AlgElement::basis(H, 3));
            svals.push_back(AlgElement::unit(H) + AlgElement::basis(H, 3));
            bool d0_ok = true;
            for (const AlgElement& s : svals)
                if (leibniz_holds(*A8[k], d0_matrix(A8[k], s)) !=
                    d0_condition(placements[k], cH, s))
                    d0_ok = false;
            check(e, "D0 family matches the derivation condition", d0_ok);

            DerivationAlgebra der = derivations(A8[k]);
            if (placements[k] != Placement::Middle) {
                bool kills = true;
                Vec cemb = embed(A8[k], cH, false).coeff;
                for (const Matrix& d : der.basis) {
                    Vec img = d.apply(cemb);
                    for (const auto& x : img)
                        if (!x.is_zero()) kills = false;
                }
                check(e, "every derivation kills (c,0)", kills);
            }

            // Module decomposition under the derived part, exact values.
            Subspace kern = common_kernel(der, DerSubset::Derived);
            Subspace mj = module_spin(der, AlgElement::basis(A8[k], 2), DerSubset::Derived);
            Subspace mjl = module_spin(der, AlgElement::basis(A8[k], 6), DerSubset::Derived);
            if (placements[k] == Placement::Middle)
                check(e, "module decomposition 1+3+4 (differs from Corollary 24)",
                      kern.dim() == 1 && mj.dim() == 3 && mjl.dim() == 4 &&
                          intersect(mj, mjl).dim() == 0 && intersect(kern, mj).dim() == 0 &&
                          intersect(kern, mjl).dim() == 0);
            else
                check(e, "module decomposition 1+1+1+1+4 (differs from Corollary 24)",
                      kern.dim() == 4 && mj.dim() == 1 && mjl.dim() == 4 &&
                          intersect(kern, mjl).dim() == 0 && intersect(mj, kern).dim() == 1);

            // independent mod-p rank oracle for the derivation solver
            std::mt19937_64 rng(seed + 7 * k);
            const std::int64_t prime_pool[6] = {10007, 20011, 30011, 40009, 50021, 65537};
            Matrix sys = derivation_system(*A8[k]);
            bool oracle = true;
            for (int trial = 0; trial < 2; ++trial) {
                std::int64_t p = prime_pool[rng() % 6];
                std::size_t rk = rank(reduce_mod_p(sys, p));
                if (sys.cols() - rk != der.dim()) oracle = false;
            }
            check(e, "mod-p nullity oracle agrees", oracle);

            if (placements[k] == Placement::Left) {
                DivisionCertificate probe = zero_divisor_probe(A8[k], trials, seed);
                check(e, "probe finds no witness",
                      probe.verdict == DivisionVerdict::ProbabilisticNoWitness, probe.reason);
            }

            AlgebraMap tw = sigma_twist(A8[k]);
            check(e, "sigma twist to the opposite-base doubling is a homomorphism",
                  hom_check(tw) && is_bijective(tw));
            rep.entries.push_back(std::move(e));
        }

        if (want("dickson8_op_" + pname, {"8dim", "nine"})) {
            AlgebraPtr op = opposite(A8[k]);
            CatalogEntry e{"dickson8_op_" + pname, {"8dim", "nine"}, op, fingerprint(op),
                           std::nullopt, {}};
            nine_track(k, *e.fp);
            check(e, "Der: dim 4, derived 3, center 1",
                  e.fp->der && *e.fp->der == LieDiagnostics{4, 3, 1, false});
            check(e, "nucleus parts, commuter, center all dim 1",
                  e.fp->nuc_l == 1 && e.fp->nuc_m == 1 && e.fp->nuc_r == 1 && e.fp->nuc == 1 &&
                      e.fp->comm == 1 && e.fp->center == 1);
            rep.entries.push_back(std::move(e));
        }

        if (want("dickson8_tw_" + pname, {"8dim", "nine"})) {
            AlgebraPtr tw = sigma_twist(A8[k]).target;
            CatalogEntry e{"dickson8_tw_" + pname, {"8dim", "nine"}, tw, fingerprint(tw),
                           std::nullopt, {}};
            nine_track(k, *e.fp);
            check(e, "nucleus parts, commuter, center all dim 1",
                  e.fp->nuc_l == 1 && e.fp->nuc_m == 1 && e.fp->nuc_r == 1 && e.fp->nuc == 1 &&
                      e.fp->comm == 1 && e.fp->center == 1);
            rep.entries.push_back(std::move(e));
        }
    }

    if (want("nine_coincide", {"nine"})) {
        CatalogEntry e{"nine_coincide", {"nine"}, nullptr, std::nullopt, std::nullopt, {}};
        bool have = nine_ref[0] && nine_ref[1] && nine_ref[2];
        check(e, "plain/opposite/twist fingerprints coincide within each placement",
              have && nine_class_same[0] && nine_class_same[1] && nine_class_same[2]);
        check(e, "left and right placement classes coincide",
              have && *nine_ref[0] == *nine_ref[2]);
        // The middle class is separated from the others by the derived-part
        // kernel (1 vs 4); everything else in the fingerprint agrees.  This
        // differs from the claim that all nine variants share one fingerprint.
        bool mid_sep = false;
        if (have) {
            Fingerprint mid = *nine_ref[1];
            mid_sep = mid.derived_kernel_dim == 1 && nine_ref[0]->derived_kernel_dim == 4;
            mid.derived_kernel_dim = nine_ref[0]->derived_kernel_dim;
            mid_sep = mid_sep && mid == *nine_ref[0];
        }
        check(e, "middle class differs exactly in the derived-part kernel (1 vs 4)", mid_sep);
        rep.entries.push_back(std::move(e));
    }

    // ---- 16-dim octonion double ------------------------------------------
    AlgebraPtr O = make_octonion(Q, qi(-1), qi(-1), qi(-1));
    AlgElement c16 = AlgElement::unit(O) + AlgElement::basis(O, 1);  // 1 + i
    if (want("oct16", {"16dim"})) {
        AlgebraPtr A16 = dickson_double({O, c16, Placement::Left, false});
        CatalogEntry e{"oct16", {"16dim"}, A16, fingerprint(A16, false, false), std::nullopt, {}};
        try {
            e.cert = division_certificate({O, c16, Placement::Left, false});
            e.fp->division = verdict_name(e.cert->verdict);
        } catch (const UnsupportedBase& ex) {
            check(e, "division certificate applies", false, ex.what());
        }
        check(e, "division via norm(c) = 2 not a square",
              e.cert && e.cert->verdict == DivisionVerdict::Division,
              e.cert ? e.cert->reason : "");
        check(e, "not third-power associative at l",
              e.fp->third_power_assoc_at_l == std::optional<bool>(false));
        DivisionCertificate probe = zero_divisor_probe(A16, trials, seed);
        check(e, "probe finds no witness",
              probe.verdict == DivisionVerdict::ProbabilisticNoWitness, probe.reason);
        rep.entries.push_back(std::move(e));
    }

    // ---- split base: witness-grade non-division ---------------------------
    if (want("split_q8", {"split"})) {
        AlgebraPtr Hs = make_quaternion(Q, qi(1), qi(1));
        AlgElement cs = AlgElement::basis(Hs, 1);
        AlgebraPtr As = dickson_double({Hs, cs, Placement::Left, false});
        CatalogEntry e{"split_q8", {"split"}, As, std::nullopt, std::nullopt, {}};
        try {
            e.cert = division_certificate({Hs, cs, Placement::Left, false});
            bool ok = e.cert->verdict == DivisionVerdict::NotDivision && e.cert->witness;
            if (ok) e.cert->verify_witness();
            check(e, "zero-divisor witness found and re-verified", ok,
                  ok ? e.cert->witness->first.str() + " * " + e.cert->witness->second.str() + " = 0"
                     : e.cert->reason);
        } catch (const Error& ex) {
            check(e, "zero-divisor witness found and re-verified", false, ex.what());
        }
        rep.entries.push_back(std::move(e));
    }

    // ---- split-base commuter over GF(3) -----------------------------------
    if (want("split_gf3_commuter", {"commuter"})) {
        FieldSpec F3 = FieldSpec::prime_field(3);
        AlgebraPtr D3 = make_quaternion(F3, FieldValue::integer(F3, 1), FieldValue::integer(F3, 1));
        AlgElement c3 = AlgElement::basis(D3, 1);
        AlgebraPtr Am = dickson_double({D3, c3, Placement::Middle, false});
        CatalogEntry e{"split_gf3_commuter", {"commuter"}, Am, std::nullopt, std::nullopt, {}};
        Subspace comm = commuter(Am);
        bool agree = true, conditions = true;
        std::size_t found = 0;
        std::vector<std::int64_t> idx(8, 0);
        while (true) {
            Vec w;
            for (std::int64_t d : idx) w.push_back(FieldValue::integer(F3, d));
            AlgElement x(Am, w);
            bool commutes = true;
            for (std::size_t b = 0; b < 8 && commutes; ++b) {
                AlgElement eb = AlgElement::basis(Am, b);
                if (!(x * eb == eb * x)) commutes = false;
            }
            if (commutes != comm.contains(w)) agree = false;
            if (commutes && !x.is_zero()) {
                ++found;
                AlgElement u(D3, Vec(w.begin(), w.begin() + 4));
                AlgElement v(D3, Vec(w.begin() + 4, w.end()));
                if (!is_scalar(u)) conditions = false;
                if (!(c3 * v == involution_apply(v) * c3)) conditions = false;
                if (!norm(v).is_zero()) conditions = false;
            }
            std::size_t pos = 0;
            while (pos < 8 && ++idx[pos] == 3) idx[pos++] = 0;
            if (pos == 8) break;
        }
        check(e, "brute force agrees with the linear solver", agree,
              std::to_string(found) + " nonzero commuting elements");
        check(e, "commuter elements satisfy u in F, cv = sigma(v)c, N(v) = 0", conditions);
        rep.entries.push_back(std::move(e));
    }

    // ---- characteristic 2 --------------------------------------------------
    FieldSpec F2t = FieldSpec::rational_function_field(2, "t");
    FieldValue t = parse_field_value(F2t, "t");
    if (want("char2_quat", {"char2"})) {
        AlgebraPtr Q2 = make_quaternion_char2(F2t, t, t);
        CatalogEntry e{"char2_quat", {"char2"}, Q2, fingerprint(Q2), std::nullopt, {}};
        AlgElement one = AlgElement::unit(Q2), i = AlgElement::basis(Q2, 1),
                   j = AlgElement::basis(Q2, 2);
        check(e, "i^2 + i = t", i * i + i == t * one);
        check(e, "j^2 = t", j * j == t * one);
        check(e, "ij = ji + j", i * j == j * i + j);
        check(e, "associative", e.fp->nuc == 4);
        rep.entries.push_back(std::move(e));
    }
    if (want("char2_double", {"char2"})) {
        AlgebraPtr Q2 = make_quaternion_char2(F2t, t, t);
        AlgElement c2 = AlgElement::basis(Q2, 1);
        AlgebraPtr A2 = dickson_double({Q2, c2, Placement::Left, false});
        CatalogEntry e{"char2_double", {"char2"}, A2, fingerprint(A2, false, false), std::nullopt, {}};
        check(e, "not third-power associative at l",
              !third_power_assoc_probe(AlgElement::basis(A2, 4)));
        // The base [t,t) is split: y = 1 + t^-1 ij is sigma-fixed with y^2 =
        // 1 + t^-2 (ij)^2 = 0, so the doubling cannot be division and the
        // no-witness expectation is unattainable.  Assert the exact witness
        // instead, and require any probe-reported witness to re-verify.
        AlgElement y = AlgElement::unit(Q2) +
                       parse_field_value(F2t, "1/t") * AlgElement::basis(Q2, 3);
        AlgElement y8 = embed(A2, y, false);
        check(e, "base is split: (1 + t^-1*ij)^2 = 0 exactly (no-witness expectation dropped)",
              !y8.is_zero() && (y8 * y8).is_zero(), y.str());
        DivisionCertificate probe = zero_divisor_probe(A2, std::min<long>(trials, 1000), seed);
        e.cert = probe;
        bool sound = probe.verdict == DivisionVerdict::ProbabilisticNoWitness;
        if (probe.verdict == DivisionVerdict::NotDivision && probe.witness) {
            try {
                probe.verify_witness();
                sound = true;
            } catch (const Error&) {
            }
        }
        check(e, "probe verdict is sound (any reported witness re-verifies exactly)", sound,
              probe.reason);
        rep.entries.push_back(std::move(e));
    }

    // ---- isomorphism families ----------------------------------------------
    if (want("iso_families", {"iso"})) {
        CatalogEntry e{"iso_families", {"iso"}, nullptr, std::nullopt, std::nullopt, {}};
        std::vector<FieldValue> ms = {qi(2), qi(3), qi(5), qi(-2), qi(7) / qi(3),
                                      qi(1) / qi(2), qi(-1)};

        int pass = 0, total = 0;
        for (int k = 0; k < 3; ++k)
            for (const FieldValue& m : ms) {
                ++total;
                try {
                    iso_scale(A8[k], identity_map(H), m);
                    ++pass;
                } catch (const Error&) {
                }
            }
        check(e, "iso_scale across placements", pass == total,
              std::to_string(pass) + "/" + std::to_string(total) + " samples pass");

        std::vector<AlgElement> as = l_unit_samples(H, 7), zs = norm_one_samples(H, 7);
        pass = total = 0;
        for (int k = 0; k < 3; ++k)
            for (std::size_t s = 0; s < 7; ++s) {
                ++total;
                AlgebraMap m = iso_inner(A8[k], as[s], zs[s]);
                if (m.target->same_tensor_as(*A8[k]) && hom_check(m)) ++pass;
            }
        check(e, "iso_inner automorphisms (a in L, N(z) = 1)", pass == total,
              std::to_string(pass) + "/" + std::to_string(total) + " samples pass");

        std::vector<AlgElement> ljs = lj_samples(H, 20), zs20 = norm_one_samples(H, 20);
        int refuted = 0;
        total = 0;
        for (std::size_t s = 0; s < 20; ++s) {
            ++total;
            AlgebraMap m = iso_inner(A8[1], ljs[s], zs20[s]);
            AlgebraMap cand{A8[1], A8[1], m.matrix, "inner"};
            if (!hom_check(cand)) ++refuted;
        }
        check(e, "middle placement, a in LJ: never an automorphism", refuted == total,
              std::to_string(refuted) + "/" + std::to_string(total) +
                  " candidates refuted; consistent with Corollary 17");

        const std::pair<int, int> cross[3] = {{0, 2}, {1, 0}, {1, 2}};
        for (auto [src, dst] : cross) {
            std::vector<AlgElement> as20 = l_unit_samples(H, 20);
            refuted = total = 0;
            std::pair<AlgElement, AlgElement> w;
            for (std::size_t s = 0; s < 20; ++s) {
                ++total;
                AlgebraMap m = iso_inner(A8[src], as20[s], zs20[s], false, placements[dst]);
                if (!hom_check(m, &w)) ++refuted;
            }
            check(e,
                  "cross placement " + placement_name(placements[src]) + " -> " +
                      placement_name(placements[dst]) + " refuted",
                  refuted == total,
                  std::to_string(refuted) + "/" + std::to_string(total) +
                      " candidates fail, e.g. at (" + w.first.str() + ", " + w.second.str() +
                      "); consistent with Theorem 19");
        }

        std::pair<AlgElement, AlgElement> w;
        AlgebraMap ident{A8[0], A8[2], Matrix::identity(Q, 8), "explicit"};
        bool id_fails = !hom_check(ident, &w);
        check(e, "identity-shaped map cay -> cay_r refuted", id_fails,
              "refuting pair (" + w.first.str() + ", " + w.second.str() +
                  "); consistent with Theorem 19");

        AlgebraPtr opA = opposite(A8[0]);
        refuted = total = 0;
        for (std::size_t s = 0; s < 20; ++s) {
            ++total;
            AlgebraMap m = iso_inner(A8[0], l_unit_samples(H, 20)[s], zs20[s], true);
            AlgebraMap cand{opA, m.target, m.matrix, "inner-conj"};
            if (!hom_check(cand, &w)) ++refuted;
        }
        check(e, "opposite-vs-Dickson candidates refuted", refuted == total,
              std::to_string(refuted) + "/" + std::to_string(total) +
                  " candidates fail, e.g. at (" + w.first.str() + ", " + w.second.str() +
                  "); consistent with Theorem 25");

        pass = total = 0;
        for (std::int64_t x = 1; x <= 5; ++x)
            for (std::int64_t y : {0, 1}) {
                AlgElement z = qi(x) * AlgElement::unit(K) + qi(y) * AlgElement::basis(K, 1);
                for (bool conj : {false, true}) {
                    ++total;
                    if (hom_check(iso_nonassoc_quat(A4, z, conj))) ++pass;
                }
            }
        check(e, "nonassociative quaternion criterion maps", pass == total,
              std::to_string(pass) + "/" + std::to_string(total) + " samples pass");

        AlgebraPtr A16 = dickson_double({O, c16, Placement::Left, false});
        pass = total = 0;
        for (const FieldValue& m : ms) {
            ++total;
            try {
                iso_octonion_double(A16, identity_map(O), m);
                ++pass;
            } catch (const Error&) {
            }
        }
        check(e, "octonion-double scaling family", pass == total,
              std::to_string(pass) + "/" + std::to_string(total) + " samples pass");
        AlgebraMap gneg = half_negation(A16);
        check(e, "G_-1 = (u,-v) is an automorphism of the 16-dim doubling",
              hom_check(gneg) && gneg.target->same_tensor_as(*gneg.source));

        rep.entries.push_back(std::move(e));
    }

    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    return rep;
}

}  // namespace dickson
