#include "sphorb/exact.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sphorb {

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational norm = re * re + im * im;
    return {re / norm, -im / norm};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size())
        throw std::invalid_argument("malformed rational: " + std::string(s));
    Integer num, den;
    if (num.set_str(std::string(s.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(s.substr(slash + 1)), 10) != 0 || sgn(den) <= 0)
        throw std::invalid_argument("malformed rational: " + std::string(s));
    Rational q = frac(num, den);
    // only canonical text round-trips, so reject unreduced input
    if (q.get_num() != num || q.get_den() != den)
        throw std::invalid_argument("unreduced rational: " + std::string(s));
    return q;
}

std::string Gaussian::serialize() const {
    return rational_string(re) + "+(" + rational_string(im) + ")i";
}

Gaussian Gaussian::parse(std::string_view s) {
    auto open = s.find("+(");
    if (open == std::string_view::npos || s.size() < open + 4 || s.substr(s.size() - 2) != ")i")
        throw std::invalid_argument("malformed gaussian rational: " + std::string(s));
    return {parse_rational(s.substr(0, open)), parse_rational(s.substr(open + 2, s.size() - open - 4))};
}

std::string Gaussian::pretty() const {
    if (sgn(im) == 0) return re.get_str();
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = im.get_str() + "i";
    if (sgn(re) == 0) return imag;
    if (sgn(im) < 0) return "(" + re.get_str() + imag + ")";
    return "(" + re.get_str() + "+" + imag + ")";
}

ExactScalar::ExactScalar(const Gaussian& g) {
    if (!g.is_zero()) c_.push_back(g);
}

ExactScalar ExactScalar::i() { return ExactScalar(Gaussian(Rational(0), Rational(1))); }

ExactScalar ExactScalar::pi(int power) { return from_terms(power, {Gaussian(Rational(1))}); }

ExactScalar ExactScalar::from_terms(int low, std::vector<Gaussian> coeffs) {
    ExactScalar x;
    x.low_ = low;
    x.c_ = std::move(coeffs);
    x.canonicalize();
    return x;
}

void ExactScalar::canonicalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    auto first = std::find_if(c_.begin(), c_.end(), [](const Gaussian& g) { return !g.is_zero(); });
    low_ += static_cast<int>(first - c_.begin());
    c_.erase(c_.begin(), first);
    if (c_.empty()) low_ = 0;
}

bool ExactScalar::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == Gaussian(Rational(1)); }

bool ExactScalar::is_rational() const { return c_.empty() || (low_ == 0 && c_.size() == 1 && sgn(c_[0].im) == 0); }

Rational ExactScalar::rational() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + pretty());
    return c_.empty() ? Rational(0) : c_[0].re;
}

Gaussian ExactScalar::gaussian() const {
    if (!is_gaussian()) throw std::domain_error("scalar depends on π: " + pretty());
    return c_.empty() ? Gaussian() : c_[0];
}

Gaussian ExactScalar::coefficient(int power) const {
    int j = power - low_;
    if (j < 0 || j >= static_cast<int>(c_.size())) return {};
    return c_[j];
}

ExactScalar ExactScalar::normalized() const {
    ExactScalar x = *this;
    x.canonicalize();
    return x;
}

ExactScalar ExactScalar::inverse() const {
    if (!is_unit()) throw std::domain_error("not invertible in Q[i][π,1/π]: " + pretty());
    return from_terms(-low_, {c_[0].inverse()});
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar x = *this;
    for (auto& g : x.c_) g = -g;
    return x;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high_degree(), o.high_degree());
    if (lo < low_) c_.insert(c_.begin(), low_ - lo, Gaussian());
    low_ = lo;
    c_.resize(hi - lo + 1);
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[o.low_ - lo + j] += o.c_[j];
    canonicalize();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ExactScalar x;
    x.low_ = a.low_ + b.low_;
    x.c_.assign(a.c_.size() + b.c_.size() - 1, Gaussian());
    for (std::size_t r = 0; r < a.c_.size(); ++r)
        for (std::size_t s = 0; s < b.c_.size(); ++s) x.c_[r + s] += a.c_[r] * b.c_[s];
    x.canonicalize();
    return x;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

std::string ExactScalar::serialize() const {
    std::string out = std::to_string(low_) + ":[";
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j) out += ';';
        out += c_[j].serialize();
    }
    return out + "]";
}

ExactScalar ExactScalar::parse(std::string_view s) {
    auto colon = s.find(":[");
    if (colon == std::string_view::npos || s.empty() || s.back() != ']')
        throw std::invalid_argument("malformed scalar: " + std::string(s));
    int low = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + colon, low);
    if (ec != std::errc() || ptr != s.data() + colon) throw std::invalid_argument("malformed scalar exponent: " + std::string(s));
    std::vector<Gaussian> coeffs;
    std::string_view body = s.substr(colon + 2, s.size() - colon - 3);
    while (!body.empty()) {
        auto semi = body.find(';');
        coeffs.push_back(Gaussian::parse(body.substr(0, semi)));
        if (semi == std::string_view::npos) break;
        body = body.substr(semi + 1);
    }
    ExactScalar x = from_terms(low, coeffs);
    if (x.serialize() != s) throw std::invalid_argument("non-canonical scalar: " + std::string(s));
    return x;
}

std::string ExactScalar::pretty() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        int power = low_ + static_cast<int>(j);
        std::string coef = c_[j].pretty();
        std::string term;
        if (power == 0) {
            term = coef;
        } else {
            std::string p = power == 1 ? "π" : "π^" + std::to_string(power);
            if (coef == "1")
                term = p;
            else if (coef == "-1")
                term = "-" + p;
            else
                term = coef + p;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return c_.size() > 1 ? "(" + out + ")" : out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.pretty(); }
std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.pretty(); }

}  // namespace sphorb
