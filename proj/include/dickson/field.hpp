#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dickson/errors.hpp"

namespace dickson {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Deterministic primality check, sufficient for p < 2^31.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// polynomials over GF(p)
// ---------------------------------------------------------------------------

/// Dense polynomial over GF(p), coefficients in [0,p), no trailing zeros.
struct GfPoly {
    std::int64_t p = 2;
    std::vector<std::int64_t> c;  // c[i] is the coefficient of t^i

    GfPoly() = default;
    GfPoly(std::int64_t p_, std::vector<std::int64_t> coeffs) : p(p_), c(std::move(coeffs)) { normalize(); }

    static GfPoly zero(std::int64_t p) { return GfPoly(p, {}); }
    static GfPoly constant(std::int64_t p, std::int64_t a) { return GfPoly(p, {a}); }
    static GfPoly variable(std::int64_t p) { return GfPoly(p, {0, 1}); }

    void normalize() {
        for (auto& a : c) {
            a %= p;
            if (a < 0) a += p;
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    std::int64_t lead() const { return c.empty() ? 0 : c.back(); }
    bool is_monic() const { return lead() == 1; }
    bool is_constant() const { return c.size() <= 1; }

    bool operator==(const GfPoly& o) const { return p == o.p && c == o.c; }
};

inline std::int64_t gf_inv(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

inline std::int64_t gf_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    std::int64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline GfPoly operator+(const GfPoly& a, const GfPoly& b) {
    GfPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

inline GfPoly operator-(const GfPoly& a, const GfPoly& b) {
    GfPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

inline GfPoly operator*(const GfPoly& a, const GfPoly& b) {
    if (a.is_zero() || b.is_zero()) return GfPoly::zero(a.p);
    GfPoly r;
    r.p = a.p;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
    r.normalize();
    return r;
}

inline std::pair<GfPoly, GfPoly> divmod(const GfPoly& a, const GfPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    GfPoly rem = a, quo = GfPoly::zero(a.p);
    quo.c.assign(a.c.size(), 0);
    const std::int64_t linv = gf_inv(b.lead(), a.p);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        std::int64_t coef = rem.lead() * linv % a.p;
        quo.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            auto& x = rem.c[shift + i];
            x = (x - coef * b.c[i]) % a.p;
            if (x < 0) x += a.p;
        }
        rem.normalize();
    }
    quo.normalize();
    return {quo, rem};
}

inline GfPoly make_monic(const GfPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    GfPoly r = a;
    std::int64_t inv = gf_inv(a.lead(), a.p);
    for (auto& x : r.c) x = x * inv % a.p;
    return r;
}

/// Monic gcd.
inline GfPoly poly_gcd(GfPoly a, GfPoly b) {
    while (!b.is_zero()) {
        GfPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return make_monic(a);
}

inline GfPoly derivative(const GfPoly& a) {
    GfPoly r;
    r.p = a.p;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(static_cast<std::int64_t>(i) % a.p * a.c[i] % a.p);
    r.normalize();
    return r;
}

inline std::string poly_str(const GfPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        if (a.c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || a.c[i] != 1) s += std::to_string(a.c[i]);
        if (i > 0) {
            if (a.c[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

/// True iff a = h^2 for some h in GF(p)[t] (leading coefficient included).
inline bool poly_is_square(const GfPoly& a);

inline bool gf_scalar_is_square(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0 || p == 2) return true;
    return gf_pow(a, (p - 1) / 2, p) == 1;
}

inline bool poly_is_square(const GfPoly& a) {
    if (a.is_zero()) return true;
    if (!gf_scalar_is_square(a.lead(), a.p)) return false;
    GfPoly g = make_monic(a);
    // now decide whether the monic part is a square
    while (true) {
        if (g.is_constant()) return true;
        if (g.degree() % 2 != 0) return false;
        GfPoly d = derivative(g);
        if (d.is_zero()) {
            // g(t) = h(t)^p with the same coefficients (prime field Frobenius)
            GfPoly h;
            h.p = g.p;
            for (std::size_t i = 0; i < g.c.size(); i += static_cast<std::size_t>(g.p))
                h.c.push_back(g.c[i]);
            h.normalize();
            if (g.p == 2) return true;  // h^2 exactly
            g = h;                      // p odd: h^p square iff h square
            continue;
        }
        GfPoly cf = poly_gcd(g, d);
        GfPoly w = divmod(g, cf).first;  // distinct factors with exponent not divisible by p
        GfPoly w2 = w * w;
        auto [q, r] = divmod(g, w2);
        if (!r.is_zero()) return false;  // some factor appears exactly once
        g = make_monic(q);
    }
}

/// Reduced fraction of polynomials over GF(p), monic denominator.
struct RatFun {
    GfPoly num, den;

    RatFun() : num(GfPoly::zero(2)), den(GfPoly::constant(2, 1)) {}
    RatFun(GfPoly n, GfPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if (den.is_zero()) throw DivisionByZero();
        if (num.is_zero()) {
            den = GfPoly::constant(num.p, 1);
            return;
        }
        GfPoly g = poly_gcd(num, den);
        num = divmod(num, g).first;
        den = divmod(den, g).first;
        std::int64_t linv = gf_inv(den.lead(), den.p);
        for (auto& x : den.c) x = x * linv % den.p;
        for (auto& x : num.c) x = x * linv % num.p;
    }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------------------
// field specification and values
// ---------------------------------------------------------------------------

enum class FieldKind { Rationals, PrimeField, RationalFunctionField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;       // characteristic when finite or function field
    std::string var;          // function field variable name

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime_field(std::int64_t p) {
        if (p >= (std::int64_t{1} << 31) || !is_prime(p))
            throw Error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
        return {FieldKind::PrimeField, p, ""};
    }

    static FieldSpec rational_function_field(std::int64_t p, std::string var) {
        if (p >= (std::int64_t{1} << 31) || !is_prime(p))
            throw Error("GF(p)(t) requires a prime p < 2^31, got " + std::to_string(p));
        return {FieldKind::RationalFunctionField, p, std::move(var)};
    }

    std::int64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const {
        switch (kind) {
            case FieldKind::Rationals: return "Q";
            case FieldKind::PrimeField: return "GF(" + std::to_string(p) + ")";
            case FieldKind::RationalFunctionField:
                return "GF(" + std::to_string(p) + ")(" + var + ")";
        }
        return "?";
    }
};

/// Element of an exact field: Q, GF(p), or GF(p)(t). Immutable value type,
/// canonical representation, representational equality.
class FieldValue {
  public:
    FieldValue() = default;

    static FieldValue integer(const FieldSpec& spec, std::int64_t n) {
        return from_bigint(spec, BigInt(n));
    }

    static FieldValue from_bigint(const FieldSpec& spec, const BigInt& n) {
        FieldValue v;
        v.spec_ = spec;
        switch (spec.kind) {
            case FieldKind::Rationals: v.payload_ = BigRat(n); break;
            case FieldKind::PrimeField: {
                BigInt r = n % spec.p;
                if (r < 0) r += spec.p;
                v.payload_ = static_cast<std::int64_t>(r);
                break;
            }
            case FieldKind::RationalFunctionField: {
                BigInt r = n % spec.p;
                if (r < 0) r += spec.p;
                v.payload_ = RatFun(GfPoly::constant(spec.p, static_cast<std::int64_t>(r)),
                                    GfPoly::constant(spec.p, 1));
                break;
            }
        }
        return v;
    }

    static FieldValue rational(const BigRat& q) {
        FieldValue v;
        v.spec_ = FieldSpec::rationals();
        v.payload_ = q;
        return v;
    }

    static FieldValue residue(const FieldSpec& spec, std::int64_t r) {
        FieldValue v;
        v.spec_ = spec;
        r %= spec.p;
        if (r < 0) r += spec.p;
        v.payload_ = r;
        return v;
    }

    static FieldValue ratfun(const FieldSpec& spec, RatFun f) {
        FieldValue v;
        v.spec_ = spec;
        v.payload_ = std::move(f);
        return v;
    }

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const {
        switch (spec_.kind) {
            case FieldKind::Rationals: return rat() == 0;
            case FieldKind::PrimeField: return res() == 0;
            case FieldKind::RationalFunctionField: return fun().is_zero();
        }
        return true;
    }

    bool is_one() const { return *this == integer(spec_, 1); }

    bool operator==(const FieldValue& o) const { return spec_ == o.spec_ && payload_ == o.payload_; }
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    FieldValue operator+(const FieldValue& o) const {
        check(o);
        FieldValue v;
        v.spec_ = spec_;
        switch (spec_.kind) {
            case FieldKind::Rationals: v.payload_ = rat() + o.rat(); break;
            case FieldKind::PrimeField: v.payload_ = (res() + o.res()) % spec_.p; break;
            case FieldKind::RationalFunctionField:
                v.payload_ = RatFun(fun().num * o.fun().den + o.fun().num * fun().den,
                                    fun().den * o.fun().den);
                break;
        }
        return v;
    }

    FieldValue operator-() const {
        FieldValue v;
        v.spec_ = spec_;
        switch (spec_.kind) {
            case FieldKind::Rationals: v.payload_ = BigRat(-rat()); break;
            case FieldKind::PrimeField: v.payload_ = res() == 0 ? 0 : spec_.p - res(); break;
            case FieldKind::RationalFunctionField:
                v.payload_ = RatFun(GfPoly::zero(spec_.p) - fun().num, fun().den);
                break;
        }
        return v;
    }

    FieldValue operator-(const FieldValue& o) const { return *this + (-o); }

    FieldValue operator*(const FieldValue& o) const {
        check(o);
        FieldValue v;
        v.spec_ = spec_;
        switch (spec_.kind) {
            case FieldKind::Rationals: v.payload_ = rat() * o.rat(); break;
            case FieldKind::PrimeField: v.payload_ = res() * o.res() % spec_.p; break;
            case FieldKind::RationalFunctionField:
                v.payload_ = RatFun(fun().num * o.fun().num, fun().den * o.fun().den);
                break;
        }
        return v;
    }

    FieldValue inv() const {
        if (is_zero()) throw DivisionByZero();
        FieldValue v;
        v.spec_ = spec_;
        switch (spec_.kind) {
            case FieldKind::Rationals: v.payload_ = BigRat(1) / rat(); break;
            case FieldKind::PrimeField: v.payload_ = gf_inv(res(), spec_.p); break;
            case FieldKind::RationalFunctionField: v.payload_ = RatFun(fun().den, fun().num); break;
        }
        return v;
    }

    FieldValue operator/(const FieldValue& o) const { return *this * o.inv(); }

    const BigRat& rat() const { return std::get<BigRat>(payload_); }
    std::int64_t res() const { return std::get<std::int64_t>(payload_); }
    const RatFun& fun() const { return std::get<RatFun>(payload_); }

    std::string str() const {
        switch (spec_.kind) {
            case FieldKind::Rationals: {
                const BigRat& q = rat();
                std::string s = numerator(q).str();
                if (denominator(q) != 1) s += "/" + denominator(q).str();
                return s;
            }
            case FieldKind::PrimeField: return std::to_string(res());
            case FieldKind::RationalFunctionField: {
                const RatFun& f = fun();
                if (f.den.is_constant()) return poly_str(f.num, spec_.var);
                return "(" + poly_str(f.num, spec_.var) + ")/(" + poly_str(f.den, spec_.var) + ")";
            }
        }
        return "?";
    }

  private:
    void check(const FieldValue& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
    }

    FieldSpec spec_;
    std::variant<BigRat, std::int64_t, RatFun> payload_ = BigRat(0);
};

// ---------------------------------------------------------------------------
// squares
// ---------------------------------------------------------------------------

inline bool bigint_is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

/// True iff x = y^2 for some y in the same field (0 counts as a square).
inline bool fe_is_square(const FieldValue& x) {
    switch (x.spec().kind) {
        case FieldKind::Rationals: {
            const BigRat& q = x.rat();
            if (q < 0) return false;
            return bigint_is_square(numerator(q)) && bigint_is_square(denominator(q));
        }
        case FieldKind::PrimeField:
            return gf_scalar_is_square(x.res(), x.spec().p);
        case FieldKind::RationalFunctionField: {
            const RatFun& f = x.fun();
            if (f.is_zero()) return true;
            return poly_is_square(f.num) && poly_is_square(f.den);
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// parsing  (grammar matches str(): "n", "n/d", "poly", "(poly)/(poly)")
// ---------------------------------------------------------------------------

namespace detail {

inline GfPoly parse_poly(const FieldSpec& spec, const std::string& s, std::size_t& i) {
    // terms: [int] [* ] var [^ int], separated by + or -
    GfPoly acc = GfPoly::zero(spec.p);
    bool neg = false;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    while (true) {
        skip_ws();
        std::int64_t coef = 1;
        bool saw_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = (coef * 10 + (s[i] - '0')) % spec.p;
                ++i;
            }
            saw_coef = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        int exp = 0;
        if (i + spec.var.size() <= s.size() && s.compare(i, spec.var.size(), spec.var) == 0) {
            i += spec.var.size();
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                exp = 0;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw Error("expected exponent in polynomial: " + s);
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_coef) {
            throw Error("cannot parse polynomial term in: " + s);
        }
        GfPoly term = GfPoly::zero(spec.p);
        term.c.assign(exp + 1, 0);
        term.c[exp] = coef % spec.p;
        term.normalize();
        acc = neg ? acc - term : acc + term;
        skip_ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
            continue;
        }
        break;
    }
    return acc;
}

inline FieldValue parse_field_value_impl(const FieldSpec& spec, const std::string& s) {
    switch (spec.kind) {
        case FieldKind::Rationals: {
            auto slash = s.find('/');
            BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
            BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
            if (den == 0) throw DivisionByZero();
            return FieldValue::rational(BigRat(num, den));
        }
        case FieldKind::PrimeField: {
            bool neg = s[0] == '-';
            std::size_t i = neg ? 1 : 0;
            BigInt n(s.substr(i));
            n %= spec.p;
            if (neg) n = -n;
            return FieldValue::from_bigint(spec, n);
        }
        case FieldKind::RationalFunctionField: {
            auto strip = [](const std::string& t) {
                if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
                    return t.substr(1, t.size() - 2);
                return t;
            };
            // split on a '/' at paren depth 0
            int depth = 0;
            std::size_t slash = std::string::npos;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')') --depth;
                else if (s[i] == '/' && depth == 0) { slash = i; break; }
            }
            std::string ns = strip(slash == std::string::npos ? s : s.substr(0, slash));
            std::string ds = slash == std::string::npos ? "1" : strip(s.substr(slash + 1));
            std::size_t i = 0;
            GfPoly num = detail::parse_poly(spec, ns, i);
            if (i != ns.size()) throw Error("trailing input in polynomial: " + ns);
            i = 0;
            GfPoly den = detail::parse_poly(spec, ds, i);
            if (i != ds.size()) throw Error("trailing input in polynomial: " + ds);
            return FieldValue::ratfun(spec, RatFun(num, den));
        }
    }
    throw Error("unreachable");
}

}  // namespace detail

/// Parse a field element in the same textual form str() emits.
inline FieldValue parse_field_value(const FieldSpec& spec, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error("empty field element");
    try {
        return detail::parse_field_value_impl(spec, s);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        // the multiprecision integer constructor rejects malformed digits with
        // a generic runtime_error; normalize it
        throw Error("malformed field element '" + text + "'");
    }
}

}  // namespace dickson
