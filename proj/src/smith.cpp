#include "admkit/smith.hpp"

#include <algorithm>
#include <tuple>

namespace admkit {

std::vector<TValuation> smith_t_valuations(Matrix<TPoly> a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix not square");

    std::vector<TValuation> vals;
    vals.reserve(n);
    TPoly prev{Rat(1)};
    long prev_pivot_val = 0;

    for (size_t step = 0; step < n; ++step) {
        bool found = false;
        size_t pi = step, pj = step;
        std::tuple<long, long, size_t, size_t> best_key;
        for (size_t j = step; j < n; ++j) {
            for (size_t i = step; i < n; ++i) {
                if (a[i][j].is_zero()) continue;
                std::tuple<long, long, size_t, size_t> key{*a[i][j].valuation(),
                                                           a[i][j].degree(), j, i};
                if (!found || key < best_key) {
                    found = true;
                    best_key = key;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) {
            for (size_t r = step; r < n; ++r) vals.push_back(kValInfinite);
            break;
        }
        std::swap(a[pi], a[step]);
        if (pj != step)
            for (size_t i = 0; i < n; ++i) std::swap(a[i][pj], a[i][step]);

        const TPoly& pivot = a[step][step];
        long pv = *pivot.valuation();
        vals.push_back(pv - prev_pivot_val);

        for (size_t i = step + 1; i < n; ++i) {
            for (size_t j = step + 1; j < n; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][step] * a[step][j]).divide_exact(prev);
            a[i][step] = TPoly();
        }
        prev = pivot;
        prev_pivot_val = pv;
    }

    std::sort(vals.begin(), vals.end(), [](const TValuation& x, const TValuation& y) {
        if (x.has_value() != y.has_value()) return x.has_value();
        if (!x.has_value()) return false;
        return *x < *y;
    });
    return vals;
}

long corank_mod_tr(const std::vector<TValuation>& vals, long r) {
    long c = 0;
    for (const auto& v : vals)
        if (!v.has_value() || *v >= r) ++c;
    return c;
}

namespace {

// Shared fraction-free elimination; returns det up to the recorded swap sign.
template <typename T>
T bareiss_det(Matrix<T>& a, const T& one, const T& zero) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    if (n == 0) return one;

    T prev = one;
    int sign = 1;
    for (size_t step = 0; step + 1 < n; ++step) {
        size_t pi = step;
        while (pi < n && a[pi][step].is_zero()) ++pi;
        if (pi == n) return zero;
        if (pi != step) {
            std::swap(a[pi], a[step]);
            sign = -sign;
        }
        const T& pivot = a[step][step];
        for (size_t i = step + 1; i < n; ++i) {
            for (size_t j = step + 1; j < n; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][step] * a[step][j]).divide_exact(prev);
            a[i][step] = zero;
        }
        prev = a[step][step];
    }
    T d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

}  // namespace

TPoly det(Matrix<TPoly> m) { return bareiss_det(m, TPoly{Rat(1)}, TPoly()); }

MultiPoly det(Matrix<MultiPoly> m) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    const auto vars = m[0][0].vars();
    return bareiss_det(m, MultiPoly::constant(vars, Rat(1)), MultiPoly(vars));
}

MultiPoly det_bivariate(const Matrix<MultiPoly>& m) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    const auto vars = m[0][0].vars();
    if (vars.size() != 2) throw std::invalid_argument("det_bivariate needs two variables");
    const size_t n = m.size();

    // Sound per-variable degree bounds: sum over rows of the row maximum.
    long bound[2] = {0, 0};
    for (size_t v = 0; v < 2; ++v) {
        for (size_t i = 0; i < n; ++i) {
            int mx = 0;
            for (size_t j = 0; j < n; ++j) mx = std::max(mx, m[i][j].degree_in(vars[v]));
            bound[v] += mx;
        }
    }
    // Interpolate in the variable with the smaller bound.
    const size_t iv = bound[0] <= bound[1] ? 0 : 1;  // interpolation variable
    const size_t kv = 1 - iv;                        // kept variable
    const long deg = bound[iv];

    // Specialize, eliminate, collect values: value[t] is det as a TPoly in
    // the kept variable at interpolation node t.
    std::vector<TPoly> values;
    values.reserve(static_cast<size_t>(deg) + 1);
    for (long t = 0; t <= deg; ++t) {
        Matrix<TPoly> spec(n, std::vector<TPoly>(n));
        Rat node(t);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                std::vector<Rat> coeffs;
                for (const auto& [e, c] : m[i][j].terms()) {
                    long dk = e[kv], di = e[iv];
                    if (static_cast<long>(coeffs.size()) <= dk)
                        coeffs.resize(static_cast<size_t>(dk) + 1, Rat(0));
                    Rat p(1);
                    for (long x = 0; x < di; ++x) p *= node;
                    coeffs[static_cast<size_t>(dk)] += c * p;
                }
                spec[i][j] = TPoly(std::move(coeffs));
            }
        }
        values.push_back(det(std::move(spec)));
    }

    // Newton interpolation at nodes 0..deg, exact over Q, done on the whole
    // TPoly values (divided differences of polynomials).
    std::vector<TPoly> dd = values;
    for (long level = 1; level <= deg; ++level)
        for (long i = deg; i >= level; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) *
                TPoly(Rat(1, level));

    // Expand the Newton form: sum dd[i] * x(x-1)...(x-i+1).
    MultiPoly out(vars);
    MultiPoly basis = MultiPoly::constant(vars, Rat(1));
    MultiPoly x = MultiPoly::variable(vars, vars[iv]);
    for (long i = 0; i <= deg; ++i) {
        const TPoly& coeff = dd[static_cast<size_t>(i)];
        MultiPoly slice(vars);
        for (long dk = 0; dk <= coeff.degree(); ++dk) {
            if (coeff.coeff(dk) == 0) continue;
            std::vector<int> ev(2, 0);
            ev[kv] = static_cast<int>(dk);
            slice.add_term(ev, coeff.coeff(dk));
        }
        if (!slice.is_zero()) out += slice * basis;
        if (i < deg) basis = basis * (x - MultiPoly::constant(vars, Rat(i)));
    }
    return out;
}

namespace {

// Fraction-free determinant over the integers.
mpz_class det_integer(Matrix<mpz_class> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t step = 0; step + 1 < n; ++step) {
        size_t p = step;
        while (p < n && a[p][step] == 0) ++p;
        if (p == n) return 0;
        if (p != step) {
            std::swap(a[p], a[step]);
            sign = -sign;
        }
        const mpz_class& pivot = a[step][step];
        for (size_t i = step + 1; i < n; ++i) {
            for (size_t j = step + 1; j < n; ++j) {
                mpz_class t = a[i][j] * pivot - a[i][step] * a[step][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][step] = 0;
        }
        prev = a[step][step];
    }
    return sign < 0 ? mpz_class(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

long row_sum_degree_bound(const Matrix<MultiPoly>& m, const std::string& var) {
    long rows = 0, cols = 0;
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        int mr = 0, mc = 0;
        for (size_t j = 0; j < n; ++j) {
            mr = std::max(mr, m[i][j].degree_in(var));
            mc = std::max(mc, m[j][i].degree_in(var));
        }
        rows += mr;
        cols += mc;
    }
    return std::min(rows, cols);
}

}  // namespace

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
    mpz_class r = z % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return static_cast<u64>(r.get_ui());
}

// Determinant over Z/p by Gaussian elimination.
u64 det_mod_p(std::vector<std::vector<u64>> a, u64 p) {
    const size_t n = a.size();
    u64 d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = p - d;
        }
        d = mulmod(d, a[c][c], p);
        u64 inv = invmod(a[c][c], p);
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            u64 f = mulmod(a[i][c], inv, p);
            for (size_t j = c; j < n; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[c][j], p)) % p;
        }
    }
    return d % p;
}

const std::vector<u64>& prime_pool() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        mpz_class p;
        mpz_class start("4611686018427387904");  // 2^62
        mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
        for (int i = 0; i < 128; ++i) {
            out.push_back(static_cast<u64>(p.get_ui()));
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool det_equals_up_to_scalar(const Matrix<MultiPoly>& m, const MultiPoly& f, Rat* scalar) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    const auto vars = m[0][0].vars();
    if (vars.size() != 2) throw std::invalid_argument("det_equals_up_to_scalar is bivariate");
    const size_t n = m.size();

    // Clear denominators entrywise; the product of the scalings is absorbed
    // into the comparison scalar.
    Matrix<MultiPoly> mi = m;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpz_class lcm = 1;
            for (const auto& [e, c] : mi[i][j].terms())
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
            if (lcm != 1) mi[i][j] = mi[i][j] * Rat(lcm);
        }

    const long bx = std::max(row_sum_degree_bound(mi, vars[0]),
                             static_cast<long>(f.degree_in(vars[0])));
    const long by = std::max(row_sum_degree_bound(mi, vars[1]),
                             static_cast<long>(f.degree_in(vars[1])));

    // Largest possible |entry| on the grid, for the Hadamard bound.
    mpz_class entry_bound = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpz_class b = 0;
            for (const auto& [e, c] : mi[i][j].terms()) {
                mpz_class t = abs(c.get_num());
                for (int q = 0; q < e[0]; ++q) t *= bx > 1 ? bx : 1;
                for (int q = 0; q < e[1]; ++q) t *= by > 1 ? by : 1;
                b += t;
            }
            if (b > entry_bound) entry_bound = b;
        }
    mpz_class hadamard = 1;
    {
        mpz_class rown = entry_bound * entry_bound * static_cast<long>(n);
        mpz_class rownorm;  // ceil of sqrt, as an upper bound
        mpz_sqrt(rownorm.get_mpz_t(), rown.get_mpz_t());
        rownorm += 1;
        for (size_t i = 0; i < n; ++i) hadamard *= rownorm;
    }

    // Exact determinant at a base point with f != 0 pins the scalar.
    bool have_scalar = false;
    Rat s;
    long x0 = 0, y0 = 0;
    for (long y = 0; y <= by && !have_scalar; ++y)
        for (long x = 0; x <= bx && !have_scalar; ++x) {
            Rat fv = f.eval({{vars[0], Rat(x)}, {vars[1], Rat(y)}});
            if (fv == 0) continue;
            Matrix<mpz_class> numeric(n, std::vector<mpz_class>(n, mpz_class(0)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    mpz_class acc = 0;
                    for (const auto& [e, c] : mi[i][j].terms()) {
                        mpz_class t = c.get_num();
                        for (int q = 0; q < e[0]; ++q) t *= x;
                        for (int q = 0; q < e[1]; ++q) t *= y;
                        acc += t;
                    }
                    numeric[i][j] = acc;
                }
            mpz_class dv = det_integer(std::move(numeric));
            if (dv == 0) return false;  // det vanishes where f does not
            s = Rat(dv) / fv;
            have_scalar = true;
            x0 = x;
            y0 = y;
        }
    if (!have_scalar) return false;  // f identically zero on the grid

    // Bound on |sd * det| and |sn * F| over the grid; enough primes so the
    // modular grid agreement certifies the integer identities exactly.
    mpz_class sn = s.get_num(), sd = s.get_den();
    mpz_class fbound = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_class t = abs(c.get_num());  // f integral in our callers
        t *= c.get_den();                // stay safe if it is not
        for (int q = 0; q < e[0]; ++q) t *= bx > 1 ? bx : 1;
        for (int q = 0; q < e[1]; ++q) t *= by > 1 ? by : 1;
        fbound += t;
    }
    mpz_class need = 2 * (abs(sd) * hadamard + abs(sn) * fbound + 1);
    std::vector<u64> primes;
    mpz_class prod = 1;
    for (u64 p : prime_pool()) {
        if (mpz_mod_u64(sd, p) == 0) continue;
        if (f.terms().size() > 0) {
            bool divides_fden = false;
            for (const auto& [e, c] : f.terms())
                if (mpz_mod_u64(mpz_class(c.get_den()), p) == 0) divides_fden = true;
            if (divides_fden) continue;
        }
        primes.push_back(p);
        prod *= mpz_class(std::to_string(p));
        if (prod > need) break;
    }
    if (prod <= need) throw std::runtime_error("prime pool exhausted");

    int max_dx = f.degree_in(vars[0]), max_dy = f.degree_in(vars[1]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            max_dx = std::max(max_dx, mi[i][j].degree_in(vars[0]));
            max_dy = std::max(max_dy, mi[i][j].degree_in(vars[1]));
        }

    for (u64 p : primes) {
        u64 snp = mpz_mod_u64(sn, p), sdp = mpz_mod_u64(sd, p);
        // Coefficients reduced once per prime.
        struct RedTerm {
            int ex, ey;
            u64 cv;
        };
        std::vector<std::vector<std::vector<RedTerm>>> red(
            n, std::vector<std::vector<RedTerm>>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (const auto& [e, c] : mi[i][j].terms())
                    red[i][j].push_back(
                        {e[0], e[1], mpz_mod_u64(mpz_class(c.get_num()), p)});
        std::vector<RedTerm> fred;
        for (const auto& [e, c] : f.terms()) {
            u64 num = mpz_mod_u64(mpz_class(c.get_num()), p);
            u64 den = mpz_mod_u64(mpz_class(c.get_den()), p);
            fred.push_back({e[0], e[1], mulmod(num, invmod(den, p), p)});
        }

        for (long y = 0; y <= by; ++y) {
            std::vector<u64> ypow(static_cast<size_t>(max_dy) + 1, 1);
            for (size_t q = 1; q < ypow.size(); ++q)
                ypow[q] = mulmod(ypow[q - 1], static_cast<u64>(y) % p, p);
            // Specialize the second variable: entries become mod-p
            // coefficient vectors in the first variable.
            std::vector<std::vector<std::vector<u64>>> uni(
                n, std::vector<std::vector<u64>>(
                       n, std::vector<u64>(static_cast<size_t>(max_dx) + 1, 0)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (const auto& t : red[i][j]) {
                        auto& slot = uni[i][j][static_cast<size_t>(t.ex)];
                        slot = (slot + mulmod(t.cv, ypow[static_cast<size_t>(t.ey)], p)) % p;
                    }
            std::vector<u64> fcoef(static_cast<size_t>(max_dx) + 1, 0);
            for (const auto& t : fred) {
                auto& slot = fcoef[static_cast<size_t>(t.ex)];
                slot = (slot + mulmod(t.cv, ypow[static_cast<size_t>(t.ey)], p)) % p;
            }
            for (long x = 0; x <= bx; ++x) {
                u64 xv = static_cast<u64>(x) % p;
                std::vector<std::vector<u64>> numeric(n, std::vector<u64>(n, 0));
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        u64 acc = 0;
                        const auto& coeffs = uni[i][j];
                        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                            acc = (mulmod(acc, xv, p) + *it) % p;
                        numeric[i][j] = acc;
                    }
                u64 dv = det_mod_p(std::move(numeric), p);
                u64 fvp = 0;
                for (auto it = fcoef.rbegin(); it != fcoef.rend(); ++it)
                    fvp = (mulmod(fvp, xv, p) + *it) % p;
                if (mulmod(sdp, dv, p) != mulmod(snp, fvp, p)) return false;
            }
        }
    }
    (void)x0;
    (void)y0;
    if (scalar) *scalar = s;
    return true;
}

long rank(Matrix<Rat> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<long>(r);
}

}  // namespace admkit
