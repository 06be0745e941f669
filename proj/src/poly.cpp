#include <capelli/poly.hpp>

#include <stdexcept>

namespace capelli {

Polynomial::Polynomial(const RingDescriptor& ring, std::vector<RingElement> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    for (const RingElement& c : coeffs_)
        if (c.ring() != ring_) throw std::invalid_argument("polynomial: coefficient ring mismatch");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const RingElement& c) { return Polynomial(c.ring(), {c}); }

Polynomial Polynomial::monomial(const RingElement& c, std::size_t k) {
    std::vector<RingElement> v(k + 1, RingElement::zero(c.ring()));
    v[k] = c;
    return Polynomial(c.ring(), std::move(v));
}

Polynomial Polynomial::from_ints(const RingDescriptor& ring, const std::vector<std::int64_t>& ascending) {
    std::vector<RingElement> v;
    v.reserve(ascending.size());
    for (std::int64_t c : ascending) v.emplace_back(ring, Int(c));
    return Polynomial(ring, std::move(v));
}

std::size_t Polynomial::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const RingElement& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RingElement Polynomial::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return RingElement::zero(ring_);
}

Polynomial Polynomial::scaled(const RingElement& c) const {
    std::vector<RingElement> v;
    v.reserve(coeffs_.size());
    for (const RingElement& x : coeffs_) v.push_back(x * c);
    return Polynomial(ring_, std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<RingElement> v(k, RingElement::zero(ring_));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(ring_, std::move(v));
}

RingElement Polynomial::evaluate(const RingElement& x) const {
    RingElement acc = RingElement::zero(ring_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<RingElement> v;
    v.reserve(coeffs_.size());
    for (const RingElement& x : coeffs_) v.push_back(-x);
    return Polynomial(ring_, std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("polynomial addition: ring mismatch");
    std::vector<RingElement> v;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) v.push_back(a.coeff(k) + b.coeff(k));
    return Polynomial(a.ring_, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("polynomial multiplication: ring mismatch");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<RingElement> v(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.ring_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.ring_, std::move(v));
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = 0; k <= a.degree(); ++k) {
        if (!(a.coeff(k) == b.coeff(k))) return element_less(a.coeff(k), b.coeff(k));
    }
    return false;
}

namespace {

std::pair<RingElement, Polynomial> content_split(const Polynomial& f) {
    const RingDescriptor& R = f.ring();
    if (f.is_zero()) return {RingElement::zero(R), f};
    if (R.kind == RingKind::prime_field)
        return {f.leading(), f.scaled(f.leading().inverse_unit())};
    RingElement g = RingElement::zero(R);
    for (const RingElement& c : f.coefficients()) g = element_gcd(g, c);
    std::vector<RingElement> v;
    v.reserve(f.coefficients().size());
    for (const RingElement& c : f.coefficients()) v.push_back(*c.divided_by(g));
    Polynomial h(R, std::move(v));
    auto [u, lead] = unit_normalize(h.leading());
    (void)lead;
    return {g * u, h.scaled(u.inverse_unit())};
}

}  // namespace

RingElement content(const Polynomial& f) { return content_split(f).first; }

Polynomial primitive_part(const Polynomial& f) { return content_split(f).second; }

Polynomial derivative(const Polynomial& f) {
    const RingDescriptor& R = f.ring();
    if (f.is_zero()) return f;
    std::vector<RingElement> v;
    for (std::size_t k = 1; k < f.coefficients().size(); ++k)
        v.push_back(RingElement(R, Int(k)) * f.coeff(k));
    return Polynomial(R, std::move(v));
}

Polynomial inflate(const Polynomial& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("inflate: exponent must be positive");
    if (f.is_zero() || n == 1) return f;
    std::vector<RingElement> v(f.degree() * n + 1, RingElement::zero(f.ring()));
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) v[k * n] = f.coeff(k);
    return Polynomial(f.ring(), std::move(v));
}

std::optional<Polynomial> deflate(const Polynomial& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("deflate: exponent must be positive");
    if (f.is_zero() || n == 1) return f;
    std::vector<RingElement> v(f.degree() / n + 1, RingElement::zero(f.ring()));
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        if (f.coeff(k).is_zero()) continue;
        if (k % n != 0) return std::nullopt;
        v[k / n] = f.coeff(k);
    }
    return Polynomial(f.ring(), std::move(v));
}

Polynomial reciprocal(const Polynomial& f) {
    std::vector<RingElement> v(f.coefficients().rbegin(), f.coefficients().rend());
    return Polynomial(f.ring(), std::move(v));
}

Polynomial scale_argument(const Polynomial& f, const RingElement& c) {
    std::vector<RingElement> v;
    v.reserve(f.coefficients().size());
    RingElement ck = RingElement::one(f.ring());
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        v.push_back(f.coeff(k) * ck);
        ck = ck * c;
    }
    return Polynomial(f.ring(), std::move(v));
}

std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g) {
    if (f.ring() != g.ring()) throw std::invalid_argument("polynomial division: ring mismatch");
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const RingDescriptor& R = f.ring();
    if (f.is_zero()) return f;
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<RingElement> q(f.degree() - g.degree() + 1, RingElement::zero(R));
    Polynomial rem = f;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        std::size_t k = rem.degree() - g.degree();
        auto c = rem.leading().divided_by(g.leading());
        if (!c) return std::nullopt;
        q[k] = *c;
        rem = rem - g.shifted(k).scaled(*c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return Polynomial(R, std::move(q));
}

Polynomial det_expansion(const PolyMatrix& m) {
    if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    const RingDescriptor& R = m[0][0].ring();
    if (n == 1) return m[0][0];
    Polynomial acc(R);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_expansion(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Polynomial det_bareiss(PolyMatrix m) {
    if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    const RingDescriptor& R = m[0][0].ring();
    bool negate = false;
    Polynomial prev = Polynomial::constant(RingElement::one(R));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(R);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = try_divide_exact(num, prev);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial(R);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RingElement resultant(const Polynomial& f, const Polynomial& g) {
    if (f.ring() != g.ring()) throw std::invalid_argument("resultant: ring mismatch");
    const RingDescriptor& R = f.ring();
    if (f.is_zero() || g.is_zero()) return RingElement::zero(R);
    const std::size_t df = f.degree(), dg = g.degree();
    if (df + dg == 0) return RingElement::one(R);
    PolyMatrix s(df + dg, std::vector<Polynomial>(df + dg, Polynomial(R)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t j = 0; j <= df; ++j) s[r][r + j] = Polynomial::constant(f.coeff(df - j));
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t j = 0; j <= dg; ++j) s[dg + r][r + j] = Polynomial::constant(g.coeff(dg - j));
    Polynomial d = det_bareiss(std::move(s));
    return d.is_zero() ? RingElement::zero(R) : d.constant_term();
}

std::vector<Polynomial> multisection(const Polynomial& f, std::size_t p) {
    if (p == 0) throw std::invalid_argument("multisection: modulus must be positive");
    const RingDescriptor& R = f.ring();
    std::vector<std::vector<RingElement>> parts(p);
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        std::size_t j = k % p, q = k / p;
        parts[j].resize(std::max(parts[j].size(), q + 1), RingElement::zero(R));
        parts[j][q] = f.coeff(k);
    }
    std::vector<Polynomial> out;
    out.reserve(p);
    for (auto& v : parts) out.emplace_back(R, std::move(v));
    return out;
}

Polynomial product_over_roots(const Polynomial& vanishing, const Polynomial& g) {
    if (vanishing.ring() != g.ring()) throw std::invalid_argument("product over roots: ring mismatch");
    const RingDescriptor& R = vanishing.ring();
    if (vanishing.is_zero() || g.is_zero()) return Polynomial(R);
    // Sylvester matrix in Y of vanishing(Y) and g(X*Y); the latter has
    // monomial coefficients g_j X^j.
    const std::size_t dv = vanishing.degree(), dg = g.degree();
    if (dv + dg == 0) return Polynomial::constant(RingElement::one(R));
    PolyMatrix s(dv + dg, std::vector<Polynomial>(dv + dg, Polynomial(R)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t j = 0; j <= dv; ++j)
            s[r][r + j] = Polynomial::constant(vanishing.coeff(dv - j));
    for (std::size_t r = 0; r < dv; ++r)
        for (std::size_t j = 0; j <= dg; ++j)
            s[dg + r][r + j] = Polynomial::monomial(g.coeff(dg - j), dg - j);
    return det_bareiss(std::move(s));
}

}  // namespace capelli
