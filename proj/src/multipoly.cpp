#include "admkit/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace admkit {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rat c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[std::vector<int>(p.vars_.size(), 0)] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    std::vector<int> e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_[e] = Rat(1);
    return p;
}

size_t MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw std::invalid_argument("unknown variable: " + name);
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable lists differ");
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
}

int MultiPoly::degree_in(const std::string& var) const {
    size_t i = var_index(var);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly r(vars_);
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    std::vector<int> e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& assignment) const {
    std::vector<Rat> point;
    point.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("assignment missing variable: " + v);
        point.push_back(it->second);
    }
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        total += m;
    }
    return total;
}

TPoly MultiPoly::eval_tpoly(const std::map<std::string, TPoly>& assignment) const {
    std::vector<TPoly> point;
    point.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("assignment missing variable: " + v);
        point.push_back(it->second);
    }
    TPoly total;
    for (const auto& [e, c] : terms_) {
        TPoly m{Rat(c)};
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m = m * point[i];
        total = total + m;
    }
    return total;
}

MultiPoly MultiPoly::shift_var(size_t var_index, const Rat& c) const {
    if (c == 0) return *this;
    // var^n -> (var + c)^n, expanded with binomials.
    MultiPoly r(vars_);
    for (const auto& [e, coeff] : terms_) {
        int n = e[var_index];
        std::vector<int> base = e;
        Rat binom(1);
        Rat cpow(1);
        for (int k = 0; k <= n; ++k) {
            base[var_index] = n - k;
            r.add_term(base, coeff * binom * cpow);
            binom *= Rat(n - k, k + 1);
            cpow *= c;
        }
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    size_t i = var_index(var);
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        std::vector<int> rest = e;
        int p = rest[i];
        rest[i] = 0;
        out[static_cast<size_t>(p)].add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    check_same_vars(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem(*this), quot(vars_);
    const auto& dlead = *divisor.terms_.begin();
    std::vector<int> e(vars_.size());
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.begin();
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Rat c = rlead.second / dlead.second;
        MultiPoly mono(vars_);
        mono.terms_[e] = c;
        quot.add_term(e, c);
        rem = rem - mono * divisor;
    }
    return quot;
}

bool MultiPoly::divisible_by(const MultiPoly& divisor) const {
    try {
        divide_exact(divisor);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool MultiPoly::equals_up_to_scalar(const MultiPoly& o, Rat* scalar) const {
    if (vars_ != o.vars_) return false;
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    Rat s = terms_.begin()->second / o.terms_.begin()->second;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (a->second != s * b->second) return false;
    }
    if (scalar) *scalar = s;
    return true;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        bool has_var = false;
        for (int x : e)
            if (x != 0) has_var = true;
        bool printed = false;
        if (!has_var || c != 1) {
            os << c.get_str();
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace admkit
