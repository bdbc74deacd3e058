#include "vfcomb/counting.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace vfcomb {

namespace {

void require_degree(int degree) {
    if (degree < 1) throw std::domain_error("degree must be at least 1, got " + std::to_string(degree));
}

// Grows on demand; entries are never modified once written.
class PMemo {
public:
    std::vector<BigInt> prefix(int max_n) {
        std::lock_guard lock(mutex_);
        extend(max_n);
        return {values_.begin(), values_.begin() + max_n + 1};
    }

    BigInt at(int n) {
        std::lock_guard lock(mutex_);
        extend(n);
        return values_[static_cast<std::size_t>(n)];
    }

private:
    void extend(int max_n) {
        for (int n = static_cast<int>(values_.size()); n <= max_n; ++n) {
            BigInt sum = 0;
            for (int a = 0; 2 * a + 2 <= n; ++a) {
                const int b = n - 2 - 2 * a;
                mpz_addmul(sum.get_mpz_t(), values_[2 * a].get_mpz_t(), values_[b].get_mpz_t());
            }
            values_.push_back(values_[n - 1] + 2 * sum);
        }
    }

    std::mutex mutex_;
    std::vector<BigInt> values_{BigInt(1)};
};

PMemo& p_memo() {
    static PMemo memo;
    return memo;
}

using Poly = std::vector<BigInt>;

// acc += lhs * rhs
void add_product(Poly& acc, const Poly& lhs, const Poly& rhs) {
    if (acc.size() < lhs.size() + rhs.size() - 1) acc.resize(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), lhs[i].get_mpz_t(), rhs[j].get_mpz_t());
        }
    }
}

// p_n(t) = sum_q p_{n,q} t^q with p_n = p_{n-1} + (t + t^2) sum p_{2a} p_b.
class DimensionMemo {
public:
    Poly at(int n) {
        std::lock_guard lock(mutex_);
        for (int m = static_cast<int>(polys_.size()); m <= n; ++m) {
            Poly acc;
            for (int a = 0; 2 * a + 2 <= m; ++a) {
                add_product(acc, polys_[2 * a], polys_[m - 2 - 2 * a]);
            }
            Poly next = polys_[m - 1];
            next.resize(static_cast<std::size_t>(m) + 1);
            for (std::size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] += acc[k];  // round pair
                next[k + 2] += acc[k];  // square pair
            }
            polys_.push_back(std::move(next));
        }
        return polys_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::vector<Poly> polys_{Poly{BigInt(1)}};
};

DimensionMemo& dimension_memo() {
    static DimensionMemo memo;
    return memo;
}

// Coefficients A_n = (2-2d)_n (1-d)_n / ((2)_n n!) of the terminating
// hypergeometric sum, n = 0..d-1.
std::vector<Rational> closed_form_terms(int degree) {
    std::vector<Rational> terms;
    const Rational a(2 - 2 * degree), b(1 - degree), c(2);
    Rational term(1);
    for (int n = 0; n < degree; ++n) {
        terms.push_back(term);
        term *= (a + n) * (b + n) / ((c + n) * (n + 1));
    }
    return terms;
}

BigInt require_integer(const Rational& value, const char* what) {
    if (!is_integer(value)) {
        throw std::logic_error(std::string(what) + " evaluated to non-integer " + to_string(value));
    }
    return value.get_num();
}

}  // namespace

BigInt p_rec(int n) {
    if (n < 0) return 0;
    return p_memo().at(n);
}

std::vector<BigInt> p_table(int max_n) {
    if (max_n < 0) return {};
    return p_memo().prefix(max_n);
}

SplitSequences split_sequences(int max_n) {
    SplitSequences out;
    if (max_n < 0) return out;
    out.q.reserve(static_cast<std::size_t>(max_n) + 1);
    out.r.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        BigInt r = 0;
        BigInt q_sum = 0;
        if (n > 0) {
            BigInt r_sum = 0;
            for (int j = 0; j < n; ++j) {
                // r_{n-1-j} with r_0 = 0 only needs entries already built.
                mpz_addmul(r_sum.get_mpz_t(), out.q[j].get_mpz_t(), out.r[n - 1 - j].get_mpz_t());
                mpz_addmul(q_sum.get_mpz_t(), out.q[j].get_mpz_t(), out.q[n - 1 - j].get_mpz_t());
            }
            r = out.q[n - 1] + 2 * r_sum;
        }
        out.r.push_back(r);
        out.q.push_back(n == 0 ? BigInt(1) : r + 2 * q_sum);
    }
    return out;
}

BigInt c_total(int degree) {
    require_degree(degree);
    return p_rec(2 * degree - 2);
}

Rational hyper2f1_terminating(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& z) {
    auto nonpositive_integer = [](const Rational& x) { return is_integer(x) && x <= 0; };
    long length = -1;
    for (const Rational* x : {&a, &b}) {
        if (!nonpositive_integer(*x)) continue;
        const long k = -x->get_num().get_si();
        if (length < 0 || k < length) length = k;
    }
    if (length < 0) throw std::domain_error("2F1 series does not terminate: a and b are not non-positive integers");

    Rational sum(0), term(1);
    for (long n = 0;; ++n) {
        sum += term;
        if (n == length) break;
        if (c + n == 0) {
            throw std::domain_error("(c)_n vanishes at n = " + std::to_string(n + 1) +
                                    " before the series terminates");
        }
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
    }
    sum.canonicalize();
    return sum;
}

BigInt c_total_closed(int degree) {
    require_degree(degree);
    const auto value = hyper2f1_terminating(Rational(2 - 2 * degree), Rational(1 - degree),
                                            Rational(2), Rational(2));
    return require_integer(value, "2F1 closed form for c_d");
}

std::vector<BigInt> coeffs_algebraic(int max_degree) {
    if (max_degree < 1) throw std::domain_error("need at least one coefficient");
    // 4G^3 - 4G^2 + (z+1)G - z = 0 at order z^n, with g_0 = 0, gives
    //   g_n = [n == 1] - g_{n-1} + 4[G^2]_n - 4[G^3]_n,
    // where both powers only involve g_1..g_{n-1}.
    const auto size = static_cast<std::size_t>(max_degree) + 1;
    std::vector<BigInt> g(size), square(size);
    for (std::size_t n = 1; n < size; ++n) {
        BigInt sq = 0;
        for (std::size_t i = 1; i < n; ++i) {
            mpz_addmul(sq.get_mpz_t(), g[i].get_mpz_t(), g[n - i].get_mpz_t());
        }
        square[n] = sq;
        BigInt cube = 0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            mpz_addmul(cube.get_mpz_t(), g[i].get_mpz_t(), square[n - i].get_mpz_t());
        }
        g[n] = (n == 1 ? 1 : 0) - g[n - 1] + 4 * sq - 4 * cube;
    }
    return {g.begin() + 1, g.end()};
}

std::vector<BigInt> dimension_distribution_closed(int degree) {
    require_degree(degree);
    const auto terms = closed_form_terms(degree);
    const int top = 2 * (degree - 1);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    for (int q = 0; q <= top; ++q) {
        Rational sum(0);
        // (t + t^2)^n = t^n (1 + t)^n contributes binom(n, q - n) to t^q.
        for (int n = (q + 1) / 2; n < degree && n <= q; ++n) {
            sum += terms[n] * Rational(binomial(n, q - n));
        }
        sum.canonicalize();
        out.push_back(require_integer(sum, "closed form for c_{d,q}"));
    }
    return out;
}

std::vector<BigInt> dimension_distribution_recursive(int degree) {
    require_degree(degree);
    auto poly = dimension_memo().at(2 * degree - 2);
    poly.resize(static_cast<std::size_t>(2 * degree - 1));
    return poly;
}

std::vector<BigInt> dimension_distribution(int degree) {
    auto closed = dimension_distribution_closed(degree);
    const auto recursive = dimension_distribution_recursive(degree);
    if (closed != recursive) {
        throw std::logic_error("c_{d,q} closed form and recursion disagree at d = " +
                               std::to_string(degree));
    }
    return closed;
}

std::map<TypeKey, BigInt> type_distribution(int degree) {
    require_degree(degree);
    const int length = 2 * degree - 2;
    const int half = degree;  // s, h <= n/2 < d
    // grid[n][s * half + h] = p_{n,s,h}
    using Grid = std::vector<BigInt>;
    auto idx = [half](int s, int h) { return static_cast<std::size_t>(s * half + h); };
    std::vector<Grid> grids;
    grids.reserve(static_cast<std::size_t>(length) + 1);
    Grid base(static_cast<std::size_t>(half * half));
    base[0] = 1;
    grids.push_back(std::move(base));

    for (int n = 1; n <= length; ++n) {
        Grid acc(static_cast<std::size_t>(half * half));
        for (int a = 0; 2 * a + 2 <= n; ++a) {
            const Grid& lhs = grids[2 * a];
            const Grid& rhs = grids[n - 2 - 2 * a];
            for (int s1 = 0; s1 < half; ++s1) {
                for (int h1 = 0; h1 + s1 < half; ++h1) {
                    const BigInt& x = lhs[idx(s1, h1)];
                    if (x == 0) continue;
                    for (int s2 = 0; s1 + s2 < half; ++s2) {
                        for (int h2 = 0; s1 + s2 + h1 + h2 < half; ++h2) {
                            const BigInt& y = rhs[idx(s2, h2)];
                            if (y == 0) continue;
                            mpz_addmul(acc[idx(s1 + s2, h1 + h2)].get_mpz_t(), x.get_mpz_t(),
                                       y.get_mpz_t());
                        }
                    }
                }
            }
        }
        Grid next = grids[n - 1];
        for (int s = 0; s < half; ++s) {
            for (int h = 0; s + h < half; ++h) {
                const BigInt& v = acc[idx(s, h)];
                if (v == 0) continue;
                if (h + 1 + s < half) next[idx(s, h + 1)] += v;  // round pair
                if (s + 1 + h < half) next[idx(s + 1, h)] += v;  // square pair
            }
        }
        grids.push_back(std::move(next));
    }

    std::map<TypeKey, BigInt> out;
    const Grid& top = grids.back();
    for (int s = 0; s < half; ++s) {
        for (int h = 0; s + h < half; ++h) {
            if (top[idx(s, h)] != 0) out.emplace(TypeKey{s, h}, top[idx(s, h)]);
        }
    }

    const auto by_dimension = dimension_distribution(degree);
    std::vector<BigInt> marginal(by_dimension.size());
    BigInt total = 0;
    for (const auto& [key, count] : out) {
        marginal[static_cast<std::size_t>(2 * key.first + key.second)] += count;
        total += count;
    }
    if (marginal != by_dimension || total != c_total(degree)) {
        throw std::logic_error("c_{d,s,h} marginals disagree with c_{d,q} at d = " +
                               std::to_string(degree));
    }
    return out;
}

BigInt catalan(int n) {
    if (n < 0) throw std::domain_error("Catalan index must be non-negative");
    BigInt out = binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
    return out / (n + 1);
}

BigInt structurally_stable_count(int degree) {
    require_degree(degree);
    return catalan(degree - 1);
}

CountTable count_table(int degree, bool with_dimension, bool with_type) {
    CountTable table;
    table.degree = degree;
    table.total = c_total(degree);
    if (with_dimension) table.by_dimension = dimension_distribution(degree);
    if (with_type) table.by_type = type_distribution(degree);
    return table;
}

}  // namespace vfcomb
