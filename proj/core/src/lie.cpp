#include "sphorb/lie.hpp"

#include <stdexcept>

namespace sphorb {

Root simple_root(int k) { return {k, k + 1}; }

Root composite_root(int i, int j, int n) {
    if (i < 1 || i > j || j > n - 1) throw std::out_of_range("composite root needs 1 <= i <= j <= n-1");
    return {i, j + 1};
}

Root long_root(int i, int n) { return composite_root(i, n - i, n); }

int cartan_integer(Root a, int k) {
    auto delta = [](int x, int y) { return x == y ? 1 : 0; };
    return delta(a.i, k) - delta(a.i, k + 1) - delta(a.j, k) + delta(a.j, k + 1);
}

namespace {

void check_rank(const LieElement& x, const LieElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("rank mismatch: sl_" + std::to_string(x.n()) + " vs sl_" + std::to_string(y.n()));
}

Rational trace(const RationalMatrix& m) {
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

std::string coefficient_prefix(const Rational& c, bool first) {
    std::string s;
    Rational a = abs(c);
    if (first)
        s = sgn(c) < 0 ? "-" : "";
    else
        s = sgn(c) < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + " ";
    return s;
}

}  // namespace

LieElement::LieElement(int n) : n_(n), m_(n, n) {}

LieElement::LieElement(int n, RationalMatrix m) : n_(n), m_(std::move(m)) {
    if (m_.rows() != static_cast<std::size_t>(n) || m_.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("LieElement: matrix is not n×n");
    if (sgn(trace(m_)) != 0) throw std::invalid_argument("LieElement: matrix is not traceless");
}

LieElement LieElement::elementary(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("elementary matrix index out of range");
    LieElement x(n);
    x.m_(i - 1, j - 1) = 1;
    return x;
}

LieElement LieElement::coroot(int n, int k) {
    if (k < 1 || k > n - 1) throw std::out_of_range("coroot index out of range");
    LieElement x(n);
    x.m_(k - 1, k - 1) = 1;
    x.m_(k, k) = -1;
    return x;
}

LieElement LieElement::rotation(int n, Root a) { return root_vector(n, a) - root_vector(n, a.negative()); }

LieElement LieElement::from_coords(int n, const RationalVector& v) {
    if (v.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("coordinate vector has wrong length");
    RationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return LieElement(n, std::move(m));
}

RationalVector LieElement::coords() const {
    RationalVector v(static_cast<std::size_t>(n_) * n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) v[r * n_ + c] = m_(r, c);
    return v;
}

LieElement LieElement::operator-() const {
    LieElement x = *this;
    x.m_ *= Rational(-1);
    return x;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    check_rank(*this, o);
    m_ += o.m_;
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    check_rank(*this, o);
    m_ -= o.m_;
    return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
    m_ *= s;
    return *this;
}

std::string LieElement::name() const {
    std::string out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (i == j || sgn(at(i, j)) == 0) continue;
            out += coefficient_prefix(at(i, j), out.empty()) + "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
        }
    Rational h;
    for (int k = 1; k < n_; ++k) {
        h += at(k, k);
        if (sgn(h) != 0) out += coefficient_prefix(h, out.empty()) + "H[" + std::to_string(k) + "]";
    }
    return out.empty() ? "0" : out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    check_rank(x, y);
    return LieElement(x.n(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

Rational trace_form(const LieElement& x, const LieElement& y) {
    check_rank(x, y);
    Rational t;
    const int n = x.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rational& a = x.matrix()(r, c);
            if (sgn(a) == 0) continue;
            const Rational& b = y.matrix()(c, r);
            if (sgn(b) != 0) t += a * b;
        }
    return t;
}

bool is_nilpotent(const LieElement& x) {
    RationalMatrix p = x.matrix();
    for (int k = 1; k < x.n(); ++k) p = p * x.matrix();
    return p.is_zero_matrix();
}

GroupElement::GroupElement(int n, RationalMatrix m) : n_(n), m_(std::move(m)) {
    if (m_.rows() != static_cast<std::size_t>(n) || m_.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("GroupElement: matrix is not n×n");
    if (determinant(m_) != 1) throw std::invalid_argument("GroupElement: determinant is not 1");
}

GroupElement GroupElement::identity(int n) { return GroupElement(n, RationalMatrix::identity(n)); }

GroupElement GroupElement::inverse() const {
    Matrix<Rational> aug(n_, 2 * n_);
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) aug(r, c) = m_(r, c);
        aug(r, n_ + r) = 1;
    }
    Echelon<Rational> e = rref(aug);
    RationalMatrix inv(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) inv(r, c) = e.reduced(r, n_ + c);
    return GroupElement(n_, std::move(inv));
}

LieElement GroupElement::conjugate(const LieElement& x) const {
    if (x.n() != n_) throw std::invalid_argument("rank mismatch in conjugation");
    return LieElement(n_, m_ * x.matrix() * inverse().matrix());
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("rank mismatch in group product");
    GroupElement g;
    g.n_ = a.n_;
    g.m_ = a.m_ * b.m_;
    return g;
}

GroupElement w_squared(int n, Root a) {
    // exp(πW) acts on span(e_i, e_j) as rotation by π
    RationalMatrix m = RationalMatrix::identity(n);
    m(a.i - 1, a.i - 1) = -1;
    m(a.j - 1, a.j - 1) = -1;
    return GroupElement(n, std::move(m));
}

GroupElement unipotent_exp(const LieElement& x) {
    if (!is_nilpotent(x)) throw std::domain_error("unipotent_exp: argument is not nilpotent");
    const int n = x.n();
    RationalMatrix sum = RationalMatrix::identity(n);
    RationalMatrix term = RationalMatrix::identity(n);
    for (int k = 1; k < n; ++k) {
        term = term * x.matrix();
        term *= frac(1, k);
        if (term.is_zero_matrix()) break;
        sum += term;
    }
    return GroupElement(n, std::move(sum));
}

LieElement unipotent_log(const GroupElement& g) {
    const int n = g.n();
    RationalMatrix nil = g.matrix() - RationalMatrix::identity(n);
    RationalMatrix p = nil;
    for (int k = 1; k < n; ++k) p = p * nil;
    if (!p.is_zero_matrix()) throw std::domain_error("unipotent_log: argument is not unipotent");
    RationalMatrix sum(n, n);
    RationalMatrix power = RationalMatrix::identity(n);
    for (int k = 1; k < n; ++k) {
        power = power * nil;
        if (power.is_zero_matrix()) break;
        sum += power * frac(k % 2 == 1 ? 1 : -1, k);
    }
    return LieElement(n, std::move(sum));
}

Subalgebra::Subalgebra(int n) : n_(n), space_(static_cast<std::size_t>(n) * n) {}

Subalgebra Subalgebra::span(int n, const std::vector<LieElement>& elems) {
    Subalgebra s(n);
    for (const auto& x : elems) {
        if (x.n() != n) throw std::invalid_argument("rank mismatch in span");
        if (s.space_.insert(x.coords())) s.basis_.push_back(x);
    }
    return s;
}

Subalgebra Subalgebra::closure(int n, const std::vector<LieElement>& gens) {
    Subalgebra s = span(n, gens);
    for (std::size_t a = 0; a < s.basis_.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            LieElement z = bracket(s.basis_[a], s.basis_[b]);
            if (s.space_.insert(z.coords())) s.basis_.push_back(std::move(z));
        }
    return s;
}

Subalgebra Subalgebra::from_space(int n, const RationalSubspace& space) {
    Subalgebra s(n);
    s.space_ = space;
    for (const auto& row : space.basis()) s.basis_.push_back(LieElement::from_coords(n, row));
    return s;
}

bool Subalgebra::contains(const LieElement& x) const { return x.n() == n_ && space_.contains(x.coords()); }

bool Subalgebra::contains(const Subalgebra& s) const { return s.n_ == n_ && space_.contains(s.space_); }

bool Subalgebra::is_closed() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (!contains(bracket(basis_[a], basis_[b]))) return false;
    return true;
}

bool Subalgebra::is_ideal_of(const Subalgebra& s) const {
    if (!s.contains(*this)) return false;
    for (const auto& x : s.basis_)
        for (const auto& y : basis_)
            if (!contains(bracket(x, y))) return false;
    return true;
}

bool Subalgebra::is_abelian() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (!bracket(basis_[a], basis_[b]).is_zero()) return false;
    return true;
}

Subalgebra Subalgebra::sum(const Subalgebra& o) const {
    std::vector<LieElement> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(n_, all);
}

Subalgebra Subalgebra::intersection(const Subalgebra& o) const {
    if (o.n_ != n_) throw std::invalid_argument("rank mismatch in intersection");
    return from_space(n_, space_.intersection(o.space_));
}

RationalVector Subalgebra::coordinates(const LieElement& x) const {
    const std::size_t m = static_cast<std::size_t>(n_) * n_;
    RationalMatrix a(m, basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        RationalVector v = basis_[c].coords();
        for (std::size_t r = 0; r < m; ++r) a(r, c) = v[r];
    }
    auto sol = solve(a, x.coords());
    if (!sol) throw std::invalid_argument("element " + x.name() + " is outside the subalgebra");
    return *sol;
}

RationalMatrix Subalgebra::gram() const {
    RationalMatrix g(basis_.size(), basis_.size());
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) g(a, b) = g(b, a) = trace_form(basis_[a], basis_[b]);
    return g;
}

std::vector<std::string> Subalgebra::names() const {
    std::vector<std::string> out;
    for (const auto& x : basis_) out.push_back(x.name());
    return out;
}

namespace algebras {

Subalgebra full(int n) { return sl_block(n, 1, n); }

Subalgebra cartan(int n) {
    std::vector<LieElement> h;
    for (int k = 1; k < n; ++k) h.push_back(LieElement::coroot(n, k));
    return Subalgebra::span(n, h);
}

Subalgebra upper_nilradical(int n) {
    std::vector<LieElement> v;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v.push_back(LieElement::elementary(n, i, j));
    return Subalgebra::span(n, v);
}

Subalgebra lower_nilradical(int n) {
    std::vector<LieElement> v;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v.push_back(LieElement::elementary(n, j, i));
    return Subalgebra::span(n, v);
}

Subalgebra borel(int n) { return cartan(n).sum(upper_nilradical(n)); }

Subalgebra sl_block(int n, int first, int size) {
    if (first < 1 || size < 0 || first + size - 1 > n) throw std::out_of_range("sl block outside 1..n");
    std::vector<LieElement> v;
    for (int a = first; a < first + size; ++a)
        for (int b = first; b < first + size; ++b)
            if (a != b) v.push_back(LieElement::elementary(n, a, b));
    for (int k = first; k + 1 < first + size; ++k) v.push_back(LieElement::coroot(n, k));
    return Subalgebra::span(n, v);
}

std::vector<LieElement> chevalley_generators(int n) {
    std::vector<LieElement> g;
    for (int k = 1; k < n; ++k) {
        g.push_back(LieElement::root_vector(n, simple_root(k)));
        g.push_back(LieElement::coroot(n, k));
        g.push_back(LieElement::root_vector(n, simple_root(k).negative()));
    }
    return g;
}

}  // namespace algebras

}  // namespace sphorb
