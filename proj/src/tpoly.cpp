#include "admkit/tpoly.hpp"

#include <sstream>

namespace admkit {

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return TPoly(std::move(c));
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    return TPoly(std::move(c));
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return TPoly(std::move(c));
}

TPoly TPoly::divide_exact(const TPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return TPoly();
    std::vector<Rat> rem = coeffs_;
    long dd = divisor.degree();
    long qd = degree() - dd;
    if (qd < 0) throw std::domain_error("inexact polynomial division");
    std::vector<Rat> q(static_cast<size_t>(qd) + 1, Rat(0));
    const Rat& lead = divisor.coeffs_.back();
    for (long i = qd; i >= 0; --i) {
        Rat f = rem[static_cast<size_t>(i + dd)] / lead;
        q[static_cast<size_t>(i)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i + j)] -= f * divisor.coeffs_[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return TPoly(std::move(q));
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i].get_str();
        if (i > 0) {
            if (coeffs_[i] != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace admkit
