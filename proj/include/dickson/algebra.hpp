#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dickson/linalg.hpp"

namespace dickson {

/// Where the doubling scalar sits in the first-component product.
enum class Placement { Left, Middle, Right, LeftStar, MiddleStar, RightStar };

inline bool placement_starred(Placement p) {
    return p == Placement::LeftStar || p == Placement::MiddleStar || p == Placement::RightStar;
}

inline std::string placement_name(Placement p) {
    switch (p) {
        case Placement::Left: return "cay";
        case Placement::Middle: return "cay_m";
        case Placement::Right: return "cay_r";
        case Placement::LeftStar: return "cay_l_star";
        case Placement::MiddleStar: return "cay_m_star";
        case Placement::RightStar: return "cay_r_star";
    }
    return "?";
}

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct DoublingInfo {
    AlgebraPtr base;
    Vec scalar;  // coefficients of c in the base
    Placement placement = Placement::Left;
    bool alt_middle_star_bar = false;  // (sigma(v')c)v instead of sigma(v'c)v in rule (2*)
};

/// Finite-dimensional unit-pointed algebra presented by structure constants
/// in a distinguished basis: e_i e_j = sum_k c[i][j][k] e_k.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    Algebra(FieldSpec field, std::vector<std::string> labels, Vec tensor, std::size_t unit_index,
            std::optional<Matrix> involution = std::nullopt,
            std::optional<DoublingInfo> doubling = std::nullopt,
            std::string kind = "custom", Vec params = {})
        : field_(std::move(field)),
          dim_(labels.size()),
          labels_(std::move(labels)),
          tensor_(std::move(tensor)),
          unit_(unit_index),
          involution_(std::move(involution)),
          doubling_(std::move(doubling)),
          kind_(std::move(kind)),
          params_(std::move(params)) {
        if (tensor_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure tensor size");
        validate();
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t unit_index() const { return unit_; }
    const std::optional<Matrix>& involution() const { return involution_; }
    const std::optional<DoublingInfo>& doubling() const { return doubling_; }
    const std::string& kind() const { return kind_; }
    const Vec& params() const { return params_; }

    /// Structure constant: coefficient of e_k in e_i * e_j.
    const FieldValue& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec r(dim_, FieldValue::integer(field_, 0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                FieldValue f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) r[k] = r[k] + f * c(i, j, k);
            }
        }
        return r;
    }

    Vec basis_vec(std::size_t i) const {
        Vec v(dim_, FieldValue::integer(field_, 0));
        v[i] = FieldValue::integer(field_, 1);
        return v;
    }

    Vec unit_vec() const { return basis_vec(unit_); }

    bool same_tensor_as(const Algebra& o) const {
        return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && tensor_ == o.tensor_;
    }

    bool is_associative() const {
        if (!assoc_cache_) {
            bool a = true;
            for (std::size_t i = 0; i < dim_ && a; ++i)
                for (std::size_t j = 0; j < dim_ && a; ++j)
                    for (std::size_t k = 0; k < dim_ && a; ++k) {
                        Vec lhs = mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k));
                        Vec rhs = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
                        if (lhs != rhs) a = false;
                    }
            assoc_cache_ = a;
        }
        return *assoc_cache_;
    }

  private:
    void validate() const {
        // unit law on all basis vectors
        for (std::size_t i = 0; i < dim_; ++i) {
            if (mul(unit_vec(), basis_vec(i)) != basis_vec(i) ||
                mul(basis_vec(i), unit_vec()) != basis_vec(i))
                throw Error("unit law fails at basis vector " + labels_[i]);
        }
        if (involution_) {
            const Matrix& s = *involution_;
            if (s.rows() != dim_ || s.cols() != dim_) throw DimensionMismatch("involution matrix");
            if (!(s * s == Matrix::identity(field_, dim_)))
                throw Error("involution is not of order 2");
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j) {
                    Vec lhs = s.apply(mul(basis_vec(i), basis_vec(j)));
                    Vec rhs = mul(s.apply(basis_vec(j)), s.apply(basis_vec(i)));
                    if (lhs != rhs) throw Error("involution is not an anti-automorphism");
                }
        }
    }

    FieldSpec field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    Vec tensor_;
    std::size_t unit_;
    std::optional<Matrix> involution_;
    std::optional<DoublingInfo> doubling_;
    std::string kind_;
    Vec params_;
    mutable std::optional<bool> assoc_cache_;
};

/// Element of an algebra in its distinguished basis.
struct AlgElement {
    AlgebraPtr alg;
    Vec coeff;

    AlgElement() = default;
    AlgElement(AlgebraPtr a, Vec c) : alg(std::move(a)), coeff(std::move(c)) {
        if (coeff.size() != alg->dim()) throw DimensionMismatch("element coefficient count");
    }

    static AlgElement zero(const AlgebraPtr& a) {
        return AlgElement(a, Vec(a->dim(), FieldValue::integer(a->field(), 0)));
    }
    static AlgElement unit(const AlgebraPtr& a) { return AlgElement(a, a->unit_vec()); }
    static AlgElement basis(const AlgebraPtr& a, std::size_t i) { return AlgElement(a, a->basis_vec(i)); }

    bool is_zero() const {
        for (const auto& x : coeff)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const AlgElement& o) const { return coeff == o.coeff; }
    bool operator!=(const AlgElement& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == alg->unit_index()) s += coeff[i].str();
            else if (coeff[i].is_one()) s += alg->labels()[i];
            else s += coeff[i].str() + "*" + alg->labels()[i];
        }
        return s.empty() ? "0" : s;
    }
};

inline void check_same_algebra(const AlgElement& x, const AlgElement& y) {
    if (x.alg.get() != y.alg.get() && !x.alg->same_tensor_as(*y.alg)) throw AlgebraMismatch();
}

inline AlgElement operator+(const AlgElement& x, const AlgElement& y) {
    check_same_algebra(x, y);
    Vec r = x.coeff;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y.coeff[i];
    return AlgElement(x.alg, std::move(r));
}

inline AlgElement operator-(const AlgElement& x) {
    Vec r = x.coeff;
    for (auto& v : r) v = -v;
    return AlgElement(x.alg, std::move(r));
}

inline AlgElement operator-(const AlgElement& x, const AlgElement& y) { return x + (-y); }

inline AlgElement operator*(const FieldValue& f, const AlgElement& x) {
    Vec r = x.coeff;
    for (auto& v : r) v = f * v;
    return AlgElement(x.alg, std::move(r));
}

inline AlgElement alg_mul(const AlgElement& x, const AlgElement& y) {
    check_same_algebra(x, y);
    return AlgElement(x.alg, x.alg->mul(x.coeff, y.coeff));
}

inline AlgElement operator*(const AlgElement& x, const AlgElement& y) { return alg_mul(x, y); }

/// (xy)z - x(yz)
inline AlgElement associator(const AlgElement& x, const AlgElement& y, const AlgElement& z) {
    return (x * y) * z - x * (y * z);
}

inline AlgElement commutator(const AlgElement& x, const AlgElement& y) { return x * y - y * x; }

enum class Side { Left, Right };

/// Matrix of L_x or R_x in the distinguished basis.
inline Matrix mult_matrix(const AlgElement& x, Side side) {
    const Algebra& a = *x.alg;
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec col = side == Side::Left ? a.mul(x.coeff, a.basis_vec(j)) : a.mul(a.basis_vec(j), x.coeff);
        for (std::size_t i = 0; i < a.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

inline bool is_invertible(const AlgElement& x) {
    std::size_t n = x.alg->dim();
    return rank(mult_matrix(x, Side::Left)) == n && rank(mult_matrix(x, Side::Right)) == n;
}

inline AlgElement inverse(const AlgElement& x) {
    auto li = solve(mult_matrix(x, Side::Left), x.alg->unit_vec());
    if (!li) throw NotInvertible(x.str() + " is not invertible");
    AlgElement y(x.alg, *li);
    if ((x * y) != AlgElement::unit(x.alg) || (y * x) != AlgElement::unit(x.alg))
        throw NotInvertible(x.str() + " has no two-sided inverse");
    return y;
}

// ---------------------------------------------------------------------------
// nuclei, commuter, center
// ---------------------------------------------------------------------------

enum class NucleusPart { Left, Middle, Right, Full };

/// Linear part of the associator with the unknown in the given slot,
/// evaluated on the basis pair (i, j).
inline Matrix associator_operator(const Algebra& a, NucleusPart part, std::size_t i, std::size_t j) {
    AlgElement ei = AlgElement::basis(a.shared_from_this(), i);
    AlgElement ej = AlgElement::basis(a.shared_from_this(), j);
    Matrix Li = mult_matrix(ei, Side::Left), Ri = mult_matrix(ei, Side::Right);
    Matrix Lj = mult_matrix(ej, Side::Left), Rj = mult_matrix(ej, Side::Right);
    AlgElement eij = ei * ej;
    switch (part) {
        case NucleusPart::Left:  // [x, e_i, e_j] = (x e_i) e_j - x (e_i e_j)
            return Rj * Ri - mult_matrix(eij, Side::Right);
        case NucleusPart::Middle:  // [e_i, x, e_j] = (e_i x) e_j - e_i (x e_j)
            return Rj * Li - Li * Rj;
        case NucleusPart::Right:  // [e_i, e_j, x] = (e_i e_j) x - e_i (e_j x)
            return mult_matrix(eij, Side::Left) - Li * Lj;
        case NucleusPart::Full: break;
    }
    throw Error("unreachable");
}

inline Subspace nucleus(const AlgebraPtr& a, NucleusPart part) {
    std::size_t n = a->dim();
    std::vector<NucleusPart> parts =
        part == NucleusPart::Full
            ? std::vector<NucleusPart>{NucleusPart::Left, NucleusPart::Middle, NucleusPart::Right}
            : std::vector<NucleusPart>{part};
    std::vector<Vec> rows;
    for (NucleusPart pt : parts)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix op = associator_operator(*a, pt, i, j);
                if (op.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) rows.push_back(op.row(r));
            }
    if (rows.empty()) {
        // associative algebra: everything associates
        return row_space(Matrix::identity(a->field(), n));
    }
    return nullspace(Matrix::from_rows(a->field(), rows));
}

inline Subspace commuter(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        AlgElement ej = AlgElement::basis(a, j);
        Matrix op = mult_matrix(ej, Side::Right) - mult_matrix(ej, Side::Left);
        for (std::size_t r = 0; r < n; ++r) rows.push_back(op.row(r));
    }
    return nullspace(Matrix::from_rows(a->field(), rows));
}

inline Subspace center(const AlgebraPtr& a) { return intersect(commuter(a), nucleus(a, NucleusPart::Full)); }

/// Structure tensor transposed in (i, j); unit and field preserved.
inline AlgebraPtr opposite(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    Vec tensor;
    tensor.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) tensor.push_back(a->c(j, i, k));
    return std::make_shared<Algebra>(a->field(), a->labels(), std::move(tensor), a->unit_index(),
                                     a->involution(), std::nullopt, "opposite of " + a->kind(),
                                     a->params());
}

/// (xx)x == x(xx)
inline bool third_power_assoc_probe(const AlgElement& x) {
    AlgElement sq = x * x;
    return sq * x == x * sq;
}

// ---------------------------------------------------------------------------
// involution, norm, trace
// ---------------------------------------------------------------------------

inline AlgElement involution_apply(const AlgElement& x) {
    if (!x.alg->involution()) throw NoInvolution();
    return AlgElement(x.alg, x.alg->involution()->apply(x.coeff));
}

/// Coefficient of the unit in x*sigma(x); requires a scalar involution.
inline FieldValue norm(const AlgElement& x) {
    AlgElement p = x * involution_apply(x);
    for (std::size_t i = 0; i < p.coeff.size(); ++i)
        if (i != x.alg->unit_index() && !p.coeff[i].is_zero()) throw NonScalarInvolution();
    return p.coeff[x.alg->unit_index()];
}

inline FieldValue trace(const AlgElement& x) {
    AlgElement s = x + involution_apply(x);
    for (std::size_t i = 0; i < s.coeff.size(); ++i)
        if (i != x.alg->unit_index() && !s.coeff[i].is_zero()) throw NonScalarInvolution();
    return s.coeff[x.alg->unit_index()];
}

/// x lies in F*1.
inline bool is_scalar(const AlgElement& x) {
    for (std::size_t i = 0; i < x.coeff.size(); ++i)
        if (i != x.alg->unit_index() && !x.coeff[i].is_zero()) return false;
    return true;
}

}  // namespace dickson
