#include "gdom/formulas.hpp"

#include <algorithm>

#include "gdom/errors.hpp"

namespace gdom {

std::string_view to_string(Exactness e) {
    switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::lower_bound: return "lower";
    case Exactness::upper_bound: return "upper";
    case Exactness::conjectured: return "conjectured";
    }
    return "?";
}

namespace {

using P = std::span<const std::int64_t>;
using I = std::int64_t;

void require(bool ok, const char* condition) {
    if (!ok) {
        throw ParameterError(std::string("violated condition: ") + condition);
    }
}

void arity(P p, std::size_t n) {
    if (p.size() != n) {
        throw ParameterError("expected " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
    }
}

bool even(I x) { return x % 2 == 0; }

I ceil_half(I k) { return (k + 1) / 2; }

// Cases depend on the parity of the first parameter only, with the path/cycle
// value of H substituted for gamma_gr(H).
I lex_path_value(I k, I gh) { return even(k) ? k / 2 * gh + 1 : ceil_half(k) * gh; }
I lex_cycle_value(I k, I gh) { return even(k) ? k / 2 * gh : k / 2 * gh + 1; }

std::vector<FormulaEntry> build() {
    std::vector<FormulaEntry> c;
    auto add = [&](std::string id, std::string sig, std::string cond, Exactness ex,
                   std::function<I(P)> f) { c.push_back({std::move(id), std::move(sig), std::move(cond), ex, std::move(f)}); };
    const auto exact = Exactness::exact;
    const auto lower = Exactness::lower_bound;
    const auto upper = Exactness::upper_bound;

    // Single families.
    add("gamma_path", "k", "k >= 2", exact, [](P p) {
        arity(p, 1);
        require(p[0] >= 2, "k >= 2");
        return p[0] - 1;
    });
    add("gamma_cycle", "k", "k >= 3", exact, [](P p) {
        arity(p, 1);
        require(p[0] >= 3, "k >= 3");
        return p[0] - 2;
    });
    add("gamma_total_path", "k", "k >= 2", exact, [](P p) {
        arity(p, 1);
        require(p[0] >= 2, "k >= 2");
        return even(p[0]) ? p[0] : p[0] - 1;
    });
    add("gamma_total_cycle", "l", "l >= 3", exact, [](P p) {
        arity(p, 1);
        require(p[0] >= 3, "l >= 3");
        return even(p[0]) ? p[0] - 2 : p[0] - 1;
    });

    // Cartesian.
    add("ex_cart_complete", "n,m", "n >= 3, m >= 3", lower, [](P p) {
        arity(p, 2);
        require(p[0] >= 3 && p[1] >= 3, "n >= 3, m >= 3");
        return p[0] + p[1] - 2;
    });
    add("thm_cart_grid", "k,l", "2 <= k <= l", exact, [](P p) {
        arity(p, 2);
        require(2 <= p[0] && p[0] <= p[1], "2 <= k <= l");
        return p[0] * (p[1] - 1);
    });
    add("thm_cart_cylinder", "k,l", "k >= 2, l >= 3", exact, [](P p) {
        arity(p, 2);
        require(p[0] >= 2 && p[1] >= 3, "k >= 2, l >= 3");
        return std::max(p[1] * (p[0] - 1), p[0] * (p[1] - 2));
    });
    add("thm_cart_torus", "k,l", "3 <= k <= l, (k,l) not equal and odd", exact, [](P p) {
        arity(p, 2);
        require(3 <= p[0] && p[0] <= p[1], "3 <= k <= l");
        require(!(p[0] == p[1] && !even(p[0])), "(k,l) not equal and odd");
        return p[0] * (p[1] - 2);
    });
    add("thm_cart_torus_odd", "k", "k odd, k >= 3", exact, [](P p) {
        arity(p, 1);
        require(p[0] >= 3 && !even(p[0]), "k odd, k >= 3");
        return p[0] * (p[0] - 2) + 1;
    });
    add("prop_cart_multi_even_torus", "k_1,...,k_n",
        "k_1 <= ... <= k_n, every k_i >= 2, k_1 + ... + k_{n-1} + 2 <= k_n", exact, [](P p) {
            require(!p.empty(), "n >= 1");
            require(std::is_sorted(p.begin(), p.end()), "k_1 <= ... <= k_n");
            require(p.front() >= 2, "every k_i >= 2");
            I sum = 0;
            I prod = 1;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                sum += p[i];
                prod *= p[i];
            }
            require(sum + 2 <= p.back(), "k_1 + ... + k_{n-1} + 2 <= k_n");
            return (I{1} << p.size()) * prod * (p.back() - 1);
        });
    add("prop_cart_multi_grid", "k_1,...,k_n",
        "k_1 <= ... <= k_n, k_1 >= 1, k_n >= 2, k_1 + ... + k_{n-1} + 1 <= k_n", exact, [](P p) {
            require(!p.empty(), "n >= 1");
            require(std::is_sorted(p.begin(), p.end()), "k_1 <= ... <= k_n");
            require(p.front() >= 1 && p.back() >= 2, "k_1 >= 1, k_n >= 2");
            I sum = 0;
            I prod = 1;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                sum += p[i];
                prod *= p[i];
            }
            require(sum + 1 <= p.back(), "k_1 + ... + k_{n-1} + 1 <= k_n");
            return prod * (p.back() - 1);
        });

    // Lexicographic. gH stands for gamma_gr(H); H non-complete means gH >= 2.
    add("cor_lex_path", "k,gH", "k >= 1, k != 2, gH >= 2", exact, [](P p) {
        arity(p, 2);
        require(p[0] >= 1, "k >= 1");
        require(p[0] != 2, "k != 2");
        require(p[1] >= 2, "gH >= 2 (H not complete)");
        return lex_path_value(p[0], p[1]);
    });
    add("cor_lex_path_path", "k,l", "k > 2, l > 2", exact, [](P p) {
        arity(p, 2);
        require(p[0] > 2 && p[1] > 2, "k > 2, l > 2");
        return lex_path_value(p[0], p[1] - 1);
    });
    // C_3 is complete, so l = 3 falls outside the P_k o H hypothesis.
    add("cor_lex_path_cycle", "k,l", "k > 2, l >= 4", exact, [](P p) {
        arity(p, 2);
        require(p[0] > 2, "k > 2");
        require(p[1] >= 4, "l >= 4 (C_3 is complete)");
        return lex_path_value(p[0], p[1] - 2);
    });
    add("cor_lex_cycle", "k,gH", "k > 3, gH >= 2", exact, [](P p) {
        arity(p, 2);
        require(p[0] > 3, "k > 3");
        require(p[1] >= 2, "gH >= 2 (H not complete)");
        return lex_cycle_value(p[0], p[1]);
    });
    add("cor_lex_cycle_cycle", "k,l", "k > 3, l > 3", exact, [](P p) {
        arity(p, 2);
        require(p[0] > 3 && p[1] > 3, "k > 3, l > 3");
        return lex_cycle_value(p[0], p[1] - 2);
    });

    // Direct.
    add("cor_direct_path_cycle", "k,l", "k >= 2, l >= 4", lower, [](P p) {
        arity(p, 2);
        require(p[0] >= 2 && p[1] >= 4, "k >= 2, l >= 4");
        const I k = p[0];
        const I l = p[1];
        // The kl-2k-l+6 and kl-k-l+3 lines need a sequence of P_k with two
        // non-adjacent starts, which P_2 lacks; P_2 x C_4 = 2C_4 has value 4.
        if (k == 2) return k * l - 2 * k;
        if (even(k) && even(l)) return std::max(k * l - 2 * k - l + 6, k * l - 2 * k);
        if (!even(k) && !even(l)) return k * l - k - l + 3;
        if (even(k)) return std::max(k * l - 2 * k, k * l - k - l + 3);
        return k * l - 2 * k - l + 6;
    });
    add("cor_direct_CC", "k,l", "4 <= k <= l", lower, [](P p) {
        arity(p, 2);
        require(4 <= p[0] && p[0] <= p[1], "4 <= k <= l");
        const I k = p[0];
        const I l = p[1];
        if (even(k) && even(l)) return k * l - 2 * k - 2 * l + 6;
        if (!even(k)) return k * l - 2 * k - l + 3;
        return k * l - k - 2 * l + 3;
    });
    add("cor_direct_path_path", "k,l", "2 <= k <= l", lower, [](P p) {
        arity(p, 2);
        require(2 <= p[0] && p[0] <= p[1], "2 <= k <= l");
        const I k = p[0];
        const I l = p[1];
        if (even(k)) return k * l - k;
        if (!even(l)) return k * l - k - l + 3;
        return std::max(k * l - l, k * l - k - l + 3);
    });
    add("prop_direct_path_path_upper", "k,l", "2 <= k <= l", upper, [](P p) {
        arity(p, 2);
        require(2 <= p[0] && p[0] <= p[1], "2 <= k <= l");
        return p[0] * p[1] - p[0];
    });
    add("cor_direct_path_path_exact", "k,l", "2 <= k <= l, k even", exact, [](P p) {
        arity(p, 2);
        require(2 <= p[0] && p[0] <= p[1], "2 <= k <= l");
        require(even(p[0]), "k even");
        return p[0] * p[1] - p[0];
    });

    // Strong.
    add("cor_strong_grid", "k,l", "k >= 2, l >= 2", exact, [](P p) {
        arity(p, 2);
        require(p[0] >= 2 && p[1] >= 2, "k >= 2, l >= 2");
        return (p[0] - 1) * (p[1] - 1);
    });
    add("cor_strong_cylinder", "k,l", "k >= 2, l >= 3", exact, [](P p) {
        arity(p, 2);
        require(p[0] >= 2 && p[1] >= 3, "k >= 2, l >= 3");
        return (p[0] - 1) * (p[1] - 2);
    });
    add("cor_strong_torus_upper", "k,l", "3 <= k <= l", upper, [](P p) {
        arity(p, 2);
        require(3 <= p[0] && p[0] <= p[1], "3 <= k <= l");
        return (p[0] - 2) * (p[1] - 1);
    });
    add("strong_torus_conjectured", "k,l", "3 <= k <= l", Exactness::conjectured, [](P p) {
        arity(p, 2);
        require(3 <= p[0] && p[0] <= p[1], "3 <= k <= l");
        return (p[0] - 2) * (p[1] - 2);
    });
    add("strong_multi_path", "k_1,...,k_n", "n >= 1, every k_i >= 2", exact, [](P p) {
        require(!p.empty(), "n >= 1");
        I prod = 1;
        for (I k : p) {
            require(k >= 2, "every k_i >= 2");
            prod *= k - 1;
        }
        return prod;
    });
    add("strong_multi_path_cycle", "k_1,...,k_n,l", "n >= 1, every k_i >= 2, l >= 3", exact, [](P p) {
        require(p.size() >= 2, "n >= 1");
        I prod = 1;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            require(p[i] >= 2, "every k_i >= 2");
            prod *= p[i] - 1;
        }
        require(p.back() >= 3, "l >= 3");
        return prod * (p.back() - 2);
    });
    return c;
}

} // namespace

const std::vector<FormulaEntry>& formula_catalog() {
    static const std::vector<FormulaEntry> catalog = build();
    return catalog;
}

FormulaValue formula_value(std::string_view id, std::span<const std::int64_t> params) {
    for (const auto& e : formula_catalog()) {
        if (e.id == id) {
            try {
                return {e.evaluate(params), e.exactness};
            } catch (const ParameterError& err) {
                throw ParameterError(e.id + "(" + e.signature + "): " + err.what());
            }
        }
    }
    throw ParameterError("unknown formula id \"" + std::string(id) + "\"");
}

} // namespace gdom
