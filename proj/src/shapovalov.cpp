#include "admkit/shapovalov.hpp"

#include <algorithm>
#include <stdexcept>

namespace admkit {

namespace {

// ---- generator encodings ----

constexpr int kF = 0, kH = 1, kE = 2;

long aff_n(GenId g) {
    GenId t = ((g % 4) + 4) % 4;
    return static_cast<long>((g - t) / 4);
}
int aff_t(GenId g) { return static_cast<int>(((g % 4) + 4) % 4); }
GenId aff_gen(int type, long n) { return 4 * n + type; }

struct GenTerm {
    GenId gen;
    Rat coeff;
};

struct BracketResult {
    std::vector<GenTerm> gens;
    MultiPoly cartan;
};

// Normal-form term: negative word, S(h) coefficient, positive word.
struct TermKey {
    Word neg, pos;
    bool operator<(const TermKey& o) const {
        if (neg != o.neg) return neg < o.neg;
        return pos < o.pos;
    }
    bool operator==(const TermKey& o) const = default;
};
using Element = std::map<TermKey, MultiPoly>;

struct EngineImpl {
    EngineId id;
    std::vector<std::string> vars;

    bool is_positive(GenId g) const {
        if (id != EngineId::AffineSl2) return g > 0;
        long n = aff_n(g);
        return n > 0 || (n == 0 && aff_t(g) == kE);
    }

    bool is_odd(GenId g) const {
        return id == EngineId::NeveuSchwarz && (((g % 2) + 2) % 2) == 1;
    }

    // Adjoint eigenvalue of the Cartan variable on the generator:
    // [v, g] = shift * g.
    Rat cartan_shift(size_t var_index, GenId g) const {
        switch (id) {
            case EngineId::Virasoro:
            case EngineId::NeveuSchwarz:
                // vars {h, c}; [L_0, L_m] = -m L_m, [L_0, G_r] = -r G_r.
                if (var_index == 0) return Rat(-g, 2);
                return Rat(0);
            case EngineId::AffineSl2:
                // vars {a, K}; [h_0, e_n] = 2 e_n, [h_0, f_n] = -2 f_n.
                if (var_index == 0) {
                    int t = aff_t(g);
                    if (t == kE) return Rat(2);
                    if (t == kF) return Rat(-2);
                }
                return Rat(0);
        }
        return Rat(0);
    }

    MultiPoly zero() const { return MultiPoly(vars); }
    MultiPoly constant(Rat c) const { return MultiPoly::constant(vars, std::move(c)); }
    MultiPoly var(const std::string& v) const { return MultiPoly::variable(vars, v); }

    // Super bracket [x, y].
    BracketResult bracket(GenId x, GenId y) const {
        BracketResult out{{}, zero()};
        switch (id) {
            case EngineId::Virasoro:
            case EngineId::NeveuSchwarz: {
                bool ox = is_odd(x), oy = is_odd(y);
                Rat mx(x, 2), my(y, 2);  // indices m or r
                if (!ox && !oy) {
                    // [L_m, L_n] = (m-n) L_{m+n} + delta (m^3-m)/12 c
                    if (x + y != 0) {
                        Rat c = mx - my;
                        if (c != 0) out.gens.push_back({x + y, c});
                    } else {
                        Rat m3 = (mx * mx * mx - mx) / 12;
                        out.cartan = var("h") * (mx - my) + var("c") * m3;
                    }
                } else if (ox && oy) {
                    // {G_r, G_s} = 2 L_{r+s} + delta (r^2 - 1/4) c / 3
                    if (x + y != 0) {
                        out.gens.push_back({x + y, Rat(2)});
                    } else {
                        out.cartan =
                            var("h") * Rat(2) + var("c") * ((mx * mx - Rat(1, 4)) / 3);
                    }
                } else if (!ox && oy) {
                    // [L_m, G_r] = (m/2 - r) G_{m+r}
                    Rat c = mx / 2 - my;
                    if (c != 0) out.gens.push_back({x + y, c});
                } else {
                    // [G_r, L_m] = -(m/2 - r) G_{m+r}
                    Rat c = -(my / 2 - mx);
                    if (c != 0) out.gens.push_back({x + y, c});
                }
                break;
            }
            case EngineId::AffineSl2: {
                int tx = aff_t(x), ty = aff_t(y);
                long nx = aff_n(x), ny = aff_n(y);
                auto emit = [&](int type, long n, Rat c) {
                    if (c == 0) return;
                    if (type == kH && n == 0) {
                        out.cartan += var("a") * c;
                    } else {
                        out.gens.push_back({aff_gen(type, n), c});
                    }
                };
                if (tx == kH && ty == kH) {
                    if (nx + ny == 0) out.cartan += var("K") * Rat(2 * nx);
                } else if (tx == kH && ty != kH) {
                    emit(ty, nx + ny, ty == kE ? Rat(2) : Rat(-2));
                } else if (ty == kH && tx != kH) {
                    emit(tx, nx + ny, tx == kE ? Rat(-2) : Rat(2));
                } else if (tx == kE && ty == kF) {
                    // [e_m, f_n] = h_{m+n} + m delta_{m+n,0} K
                    emit(kH, nx + ny, Rat(1));
                    if (nx + ny == 0) out.cartan += var("K") * Rat(nx);
                } else if (tx == kF && ty == kE) {
                    emit(kH, nx + ny, Rat(-1));
                    if (nx + ny == 0) out.cartan += var("K") * Rat(-ny);
                }
                // [e,e] = [f,f] = 0
                break;
            }
        }
        return out;
    }

    Depth gen_depth(GenId g) const {
        switch (id) {
            case EngineId::Virasoro:
            case EngineId::NeveuSchwarz:
                return {-g, 0};  // L_{-j} contributes doubled level 2j = -id
            case EngineId::AffineSl2: {
                int t = aff_t(g);
                long n = aff_n(g);
                long a = (t == kF) ? 1 : (t == kE ? -1 : 0);
                return {a, -n};
            }
        }
        return {0, 0};
    }

    void add_term(Element& out, TermKey key, MultiPoly coeff) const {
        if (coeff.is_zero()) return;
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(std::move(key), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }

    void add_element(Element& out, const Element& e, const MultiPoly* scale = nullptr) const {
        for (const auto& [k, p] : e) add_term(out, k, scale ? p * *scale : p);
    }

    // Shift of a coefficient polynomial across a word: v -> v + sum of shifts.
    MultiPoly shift_across(const MultiPoly& p, const Word& w, int sign) const {
        MultiPoly out = p;
        for (size_t vi = 0; vi < vars.size(); ++vi) {
            Rat total(0);
            for (GenId g : w) total += cartan_shift(vi, g);
            if (total != 0) out = out.shift_var(vi, Rat(sign) * total);
        }
        return out;
    }

    Element mul_gen(const Element& a, GenId g) const;
    Element mul_poly(const Element& a, const MultiPoly& b) const;
    Element mul_bracket(const Element& a, const BracketResult& br) const;

    Element unit() const {
        Element e;
        e.emplace(TermKey{{}, {}}, constant(Rat(1)));
        return e;
    }
};

// (neg ox P ox pos) * B for B in S(h): B moves left across pos picking up the
// adjoint shifts, then merges into P.
Element EngineImpl::mul_poly(const Element& a, const MultiPoly& b) const {
    if (b.is_zero()) return {};
    Element out;
    for (const auto& [key, p] : a) {
        MultiPoly shifted = shift_across(b, key.pos, -1);
        add_term(out, key, p * shifted);
    }
    return out;
}

Element EngineImpl::mul_bracket(const Element& a, const BracketResult& br) const {
    Element out;
    for (const auto& t : br.gens) {
        Element part = mul_gen(a, t.gen);
        MultiPoly c = constant(t.coeff);
        add_element(out, part, &c);
    }
    if (!br.cartan.is_zero()) add_element(out, mul_poly(a, br.cartan));
    return out;
}

Element EngineImpl::mul_gen(const Element& a, GenId g) const {
    Element out;
    const bool gpos = is_positive(g);
    for (const auto& [key, p] : a) {
        if (gpos) {
            if (key.pos.empty() || key.pos.back() < g) {
                TermKey k = key;
                k.pos.push_back(g);
                add_term(out, std::move(k), p);
            } else if (key.pos.back() == g && !is_odd(g)) {
                TermKey k = key;
                k.pos.push_back(g);
                add_term(out, std::move(k), p);
            } else if (key.pos.back() == g && is_odd(g)) {
                // g g = (1/2) [g, g]
                Element stem;
                TermKey k = key;
                k.pos.pop_back();
                stem.emplace(std::move(k), p);
                Element sq = mul_bracket(stem, bracket(g, g));
                MultiPoly half = constant(Rat(1, 2));
                add_element(out, sq, &half);
            } else {
                // ... q g = s g q + [q, g] with q = pos.back() > g
                GenId q = key.pos.back();
                Element stem;
                TermKey k = key;
                k.pos.pop_back();
                stem.emplace(std::move(k), p);
                Element moved = mul_gen(mul_gen(stem, g), q);
                if (is_odd(q) && is_odd(g)) {
                    MultiPoly minus = constant(Rat(-1));
                    add_element(out, moved, &minus);
                } else {
                    add_element(out, moved);
                }
                add_element(out, mul_bracket(stem, bracket(q, g)));
            }
            continue;
        }
        // Negative generator: walk left across the positive zone.
        if (!key.pos.empty()) {
            GenId q = key.pos.back();
            Element stem;
            TermKey k = key;
            k.pos.pop_back();
            stem.emplace(std::move(k), p);
            Element moved = mul_gen(mul_gen(stem, g), q);
            if (is_odd(q) && is_odd(g)) {
                MultiPoly minus = constant(Rat(-1));
                add_element(out, moved, &minus);
            } else {
                add_element(out, moved);
            }
            add_element(out, mul_bracket(stem, bracket(q, g)));
            continue;
        }
        // Cross the Cartan coefficient: P(v) g = g P(v + shift).
        MultiPoly shifted = p;
        for (size_t vi = 0; vi < vars.size(); ++vi) {
            Rat s = cartan_shift(vi, g);
            if (s != 0) shifted = shifted.shift_var(vi, s);
        }
        // Insert into the negative word, bubbling from the right.
        if (key.neg.empty() || key.neg.back() < g) {
            TermKey k = key;
            k.neg.push_back(g);
            add_term(out, std::move(k), shifted);
        } else if (key.neg.back() == g && !is_odd(g)) {
            TermKey k = key;
            k.neg.push_back(g);
            add_term(out, std::move(k), shifted);
        } else if (key.neg.back() == g && is_odd(g)) {
            Element stem;
            TermKey k = key;
            k.neg.pop_back();
            stem.emplace(std::move(k), shifted);
            Element sq = mul_bracket(stem, bracket(g, g));
            MultiPoly half = constant(Rat(1, 2));
            add_element(out, sq, &half);
        } else {
            GenId q = key.neg.back();
            Element stem;
            TermKey k = key;
            k.neg.pop_back();
            stem.emplace(std::move(k), shifted);
            Element moved = mul_gen(mul_gen(stem, g), q);
            if (is_odd(q) && is_odd(g)) {
                MultiPoly minus = constant(Rat(-1));
                add_element(out, moved, &minus);
            } else {
                add_element(out, moved);
            }
            add_element(out, mul_bracket(stem, bracket(q, g)));
        }
    }
    return out;
}

const EngineImpl& impl_for(EngineId id) {
    static const EngineImpl vir{EngineId::Virasoro, {"h", "c"}};
    static const EngineImpl ns{EngineId::NeveuSchwarz, {"h", "c"}};
    static const EngineImpl aff{EngineId::AffineSl2, {"a", "K"}};
    switch (id) {
        case EngineId::Virasoro:
            return vir;
        case EngineId::NeveuSchwarz:
            return ns;
        case EngineId::AffineSl2:
            return aff;
    }
    throw std::logic_error("bad engine id");
}

}  // namespace

AlgebraEngine::AlgebraEngine(EngineId id, long cutoff) : id_(id), cutoff_(cutoff) {
    vars_ = impl_for(id).vars;
    jacobi_spot_check();
}

AlgebraEngine AlgebraEngine::virasoro(long max_depth_x2) {
    return AlgebraEngine(EngineId::Virasoro, max_depth_x2);
}
AlgebraEngine AlgebraEngine::neveu_schwarz(long max_depth_x2) {
    return AlgebraEngine(EngineId::NeveuSchwarz, max_depth_x2);
}
AlgebraEngine AlgebraEngine::affine_sl2(long max_total_depth) {
    return AlgebraEngine(EngineId::AffineSl2, max_total_depth);
}

void AlgebraEngine::jacobi_spot_check() const {
    // x*y and y*x are straightened along different paths; their difference
    // must reproduce the bracket table entry, which cross-checks the table
    // against the commutation machinery on a sample of generator pairs.
    const auto& e = impl_for(id_);
    std::vector<std::pair<GenId, GenId>> pairs;
    switch (id_) {
        case EngineId::Virasoro:
            pairs = {{4, -4}, {2, -4}, {6, -2}, {2, -2}};
            break;
        case EngineId::NeveuSchwarz:
            pairs = {{1, -1}, {3, -3}, {2, -3}, {3, -2}, {1, -3}};
            break;
        case EngineId::AffineSl2:
            pairs = {{aff_gen(kE, 0), aff_gen(kF, 0)},
                     {aff_gen(kE, 1), aff_gen(kF, -1)},
                     {aff_gen(kH, 1), aff_gen(kH, -1)},
                     {aff_gen(kH, 1), aff_gen(kF, -1)}};
            break;
    }
    for (auto [x, y] : pairs) {
        Element xy = e.mul_gen(e.mul_gen(e.unit(), x), y);
        Element yx = e.mul_gen(e.mul_gen(e.unit(), y), x);
        Rat s = (e.is_odd(x) && e.is_odd(y)) ? Rat(1) : Rat(-1);
        Element diff = xy;
        MultiPoly sp = e.constant(s);
        e.add_element(diff, yx, &sp);
        Element expect = e.mul_bracket(e.unit(), e.bracket(x, y));
        if (!(diff == expect)) throw std::logic_error("bracket table inconsistent");
    }
}

void AlgebraEngine::check_depth(Depth nu) const {
    if (id_ == EngineId::AffineSl2) {
        if (nu.second < 0 || nu.first < -nu.second)
            throw std::invalid_argument("depth outside the negative cone");
        if (nu.second > cutoff_ || nu.first + nu.second > cutoff_)
            throw CutoffError("engine depth cutoff exceeded");
    } else {
        if (nu.first < 0 || nu.second != 0)
            throw std::invalid_argument("depth must be a nonnegative doubled level");
        if (nu.first > cutoff_) throw CutoffError("engine depth cutoff exceeded");
        if (id_ == EngineId::Virasoro && nu.first % 2 != 0)
            throw std::invalid_argument("Virasoro depths are integral");
    }
}

std::vector<Depth> AlgebraEngine::depths_up_to(long bound) const {
    std::vector<Depth> out;
    if (id_ == EngineId::AffineSl2) {
        for (long b = 0; b <= bound; ++b)
            for (long a = -b; a + b <= bound; ++a) {
                if (a == 0 && b == 0) continue;
                out.push_back({a, b});
            }
        // Height order: ht(a alpha + b delta) = a + 2b.
        std::sort(out.begin(), out.end(), [](const Depth& x, const Depth& y) {
            long hx = x.first + 2 * x.second;
            long hy = y.first + 2 * y.second;
            if (hx != hy) return hx < hy;
            return x < y;
        });
    } else {
        long step = id_ == EngineId::Virasoro ? 2 : 1;
        for (long d = step; d <= bound; d += step) out.push_back({d, 0});
    }
    return out;
}

Depth AlgebraEngine::gen_depth(GenId g) const { return impl_for(id_).gen_depth(g); }
bool AlgebraEngine::gen_is_odd(GenId g) const { return impl_for(id_).is_odd(g); }

std::string AlgebraEngine::gen_name(GenId g) const {
    if (id_ == EngineId::AffineSl2) {
        const char* names[3] = {"f", "h", "e"};
        return std::string(names[aff_t(g)]) + "[" + std::to_string(aff_n(g)) + "]";
    }
    bool odd = gen_is_odd(g);
    long num = g, den = 2;
    if (num % 2 == 0) {
        num /= 2;
        den = 1;
    }
    std::string idx = den == 1 ? std::to_string(num) : std::to_string(num) + "/2";
    return std::string(odd ? "G[" : "L[") + idx + "]";
}

std::vector<Word> AlgebraEngine::pbw_basis(Depth nu) const {
    check_depth(nu);
    std::vector<Word> out;
    if (id_ == EngineId::Virasoro || id_ == EngineId::NeveuSchwarz) {
        const long target = nu.first;  // doubled
        const bool ns = id_ == EngineId::NeveuSchwarz;
        // Partitions into doubled parts, descending; even parts free,
        // odd parts (NS fermions) distinct.
        Word current;
        auto rec = [&](auto&& self, long rest, long max_part) -> void {
            if (rest == 0) {
                Word w;
                // Parts descend, so the ids -part already ascend.
                for (GenId part : current) w.push_back(-part);
                out.push_back(std::move(w));
                return;
            }
            for (long part = std::min(rest, max_part); part >= 1; --part) {
                if (!ns && part % 2 != 0) continue;
                long next_max = (part % 2 != 0) ? part - 1 : part;
                current.push_back(part);
                self(self, rest - part, next_max);
                current.pop_back();
            }
        };
        long max0 = target;
        if (!ns && max0 % 2 != 0) max0 -= 1;
        rec(rec, target, max0);
    } else {
        // Negative generators ordered by id; n*4+t encoding makes the most
        // negative loop degrees smallest.
        std::vector<GenId> gens;
        for (long n = -nu.second; n <= 0; ++n) {
            for (int t : {kF, kH, kE}) {
                if (n == 0 && t != kF) continue;
                if (n == 0 && t == kF) {
                    gens.push_back(aff_gen(kF, 0));
                } else {
                    gens.push_back(aff_gen(t, n));
                }
            }
        }
        std::sort(gens.begin(), gens.end());
        Word current;
        auto rec = [&](auto&& self, size_t idx, long a, long b) -> void {
            if (a == 0 && b == 0) {
                out.push_back(current);
                return;
            }
            if (idx == gens.size()) return;
            GenId g = gens[idx];
            Depth d = impl_for(id_).gen_depth(g);
            long max_uses;
            if (d.second > 0)
                max_uses = b / d.second;
            else
                max_uses = std::max(0L, a);  // f_0
            for (long uses = 0; uses <= max_uses; ++uses) {
                long na = a - uses * d.first, nb = b - uses * d.second;
                if (nb >= 0 && na >= -nb) {
                    size_t before = current.size();
                    for (long u = 0; u < uses; ++u) current.push_back(g);
                    self(self, idx + 1, na, nb);
                    current.resize(before);
                }
            }
        };
        rec(rec, 0, nu.first, nu.second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Word AlgebraEngine::sigma(const Word& negative_word) const {
    Word w;
    w.reserve(negative_word.size());
    for (auto it = negative_word.rbegin(); it != negative_word.rend(); ++it) {
        if (id_ == EngineId::AffineSl2)
            w.push_back(2 - *it);  // e_n <-> f_{-n}, h_n <-> h_{-n}
        else
            w.push_back(-*it);
    }
    return w;
}

MultiPoly AlgebraEngine::hc(const Word& word) const {
    const auto& e = impl_for(id_);
    Element acc = e.unit();
    for (GenId g : word) acc = e.mul_gen(acc, g);
    auto it = acc.find(TermKey{{}, {}});
    return it == acc.end() ? e.zero() : it->second;
}

ShapovalovMatrix AlgebraEngine::shapovalov_matrix(Depth nu) const {
    check_depth(nu);
    ShapovalovMatrix m;
    m.depth = nu;
    m.col_basis = pbw_basis(nu);
    for (const auto& w : m.col_basis) m.row_basis.push_back(sigma(w));
    const size_t n = m.col_basis.size();
    m.entries.assign(n, std::vector<MultiPoly>(n, MultiPoly(vars_)));
    const auto& e = impl_for(id_);
    for (size_t i = 0; i < n; ++i) {
        Element rowelt = e.unit();
        for (GenId g : m.row_basis[i]) rowelt = e.mul_gen(rowelt, g);
        for (size_t j = 0; j < n; ++j) {
            Element acc = rowelt;
            for (GenId g : m.col_basis[j]) acc = e.mul_gen(acc, g);
            auto it = acc.find(TermKey{{}, {}});
            m.entries[i][j] = (it == acc.end()) ? e.zero() : it->second;
        }
    }
    return m;
}

MultiPoly AlgebraEngine::shapovalov_det(Depth nu) const {
    auto m = shapovalov_matrix(nu);
    if (m.entries.empty()) return MultiPoly::constant(vars_, Rat(1));
    // Symbolic elimination wins on small matrices; interpolation on larger
    // ones, where fraction-free minors blow up.
    if (m.entries.size() <= 6) return det(std::move(m.entries));
    return det_bivariate(m.entries);
}

GradedDims AlgebraEngine::maximal_submodule_dims(const Assignment& lambda,
                                                 long depth_bound) const {
    GradedDims out;
    out.cutoff = depth_bound;
    for (Depth nu : depths_up_to(depth_bound)) {
        auto m = shapovalov_matrix(nu);
        const size_t n = m.entries.size();
        Matrix<Rat> num(n, std::vector<Rat>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) num[i][j] = m.entries[i][j].eval(lambda);
        out.table[nu] = static_cast<long>(n) - rank(std::move(num));
    }
    return out;
}

std::vector<long> AlgebraEngine::jantzen_layer_dims(const Assignment& lambda,
                                                    const Assignment& mu,
                                                    const Assignment& mu2, Depth nu) const {
    auto m = shapovalov_matrix(nu);
    const size_t n = m.entries.size();
    Matrix<TPoly> def(n, std::vector<TPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) def[i][j] = deform(m.entries[i][j], lambda, mu, mu2);
    auto vals = smith_t_valuations(std::move(def));
    for (const auto& v : vals)
        if (!v.has_value())
            throw std::domain_error(
                "degenerate Jantzen filtration: deformed determinant is zero");
    std::vector<long> layers;
    for (long r = 1;; ++r) {
        long c = corank_mod_tr(vals, r);
        if (c == 0) break;
        layers.push_back(c);
    }
    return layers;
}

AlgebraEngine::SumFormulaReport AlgebraEngine::sum_formula_check(const Assignment& lambda,
                                                                 const Assignment& mu,
                                                                 const Assignment& mu2,
                                                                 Depth nu) const {
    SumFormulaReport rep;
    auto layers = jantzen_layer_dims(lambda, mu, mu2, nu);
    for (long d : layers) rep.layer_sum += d;
    // Independent route: valuation of the determinant of the deformed matrix,
    // computed by plain fraction-free elimination (no valuation pivoting).
    auto m = shapovalov_matrix(nu);
    const size_t n = m.entries.size();
    Matrix<TPoly> def(n, std::vector<TPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) def[i][j] = deform(m.entries[i][j], lambda, mu, mu2);
    TPoly d = det(std::move(def));
    auto v = t_valuation(d);
    if (!v.has_value())
        throw std::domain_error("degenerate Jantzen filtration: deformed determinant is zero");
    rep.det_valuation = *v;
    rep.equal = rep.layer_sum == rep.det_valuation;
    return rep;
}

SelfextJantzenResult AlgebraEngine::selfext_jantzen_test(const Assignment& lambda,
                                                         const Assignment& mu,
                                                         const Assignment& mu2,
                                                         long depth_bound) const {
    for (Depth nu : depths_up_to(depth_bound)) {
        auto layers = jantzen_layer_dims(lambda, mu, mu2, nu);
        long l1 = layers.size() >= 1 ? layers[0] : 0;
        long l2 = layers.size() >= 2 ? layers[1] : 0;
        if (l1 != l2) return NotInImage{nu};
    }
    return ConsistentUpTo{depth_bound};
}

}  // namespace admkit
