#include "enumseq/congruence.hpp"

#include <map>
#include <stdexcept>

#include "enumseq/lines.hpp"

namespace enumseq {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    Integer n(p);
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Exponent q with k = 2^q, or -1 when k is not a power of two.
long power_of_two_exponent(long k) {
    if (k < 1) return -1;
    long q = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++q;
    }
    return k == 1 ? q : -1;
}

TheoremReport make_report(std::string check, std::string params) {
    TheoremReport rep;
    rep.check = std::move(check);
    rep.params = std::move(params);
    return rep;
}

// Records the first counterexample; later ones only clear the pass flag.
void fail(TheoremReport& rep, std::string location, std::string expected, std::string actual) {
    if (rep.pass) {
        rep.counterexample = Counterexample{std::move(location), std::move(expected),
                                            std::move(actual)};
    }
    rep.pass = false;
}

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::uint64_t v_mod(long n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("v_mod: negative index");
    if (k == 0) throw std::invalid_argument("v_mod: zero modulus");
    if (n == 0) return mod_nonneg_u64(Integer(-1), k);
    if (n == 1) return 1 % k;
    const long d = 2 * n - 3;
    ModPoly p = ModPoly::constant(ModInt(1 % k, k));
    for (long j = 0; j <= d; ++j) {
        p.mul_linear(ModInt(static_cast<std::uint64_t>(d - j) % k, k),
                     ModInt(static_cast<std::uint64_t>(j) % k, k), n);
    }
    ModInt high = p.coeff(static_cast<std::size_t>(n - 1));
    ModInt low = p.coeff(static_cast<std::size_t>(n - 2));
    if (high.modulus != k) high = ModInt(high.value, k);
    if (low.modulus != k) low = ModInt(low.value, k);
    return (high - low).value;
}

const std::vector<std::uint64_t>& CongruenceTable::row(long r) const {
    if (r < 1 || r > modulus) throw std::out_of_range("CongruenceTable: row out of range");
    return rows[static_cast<std::size_t>(r - 1)];
}

std::uint64_t CongruenceTable::entry(long r, long l) const {
    const auto& values = row(r);
    if (l < 0 || l >= depth) throw std::out_of_range("CongruenceTable: column out of range");
    return values[static_cast<std::size_t>(l)];
}

CongruenceTable residue_table(const std::function<Integer(long)>& term, long k, long depth) {
    if (k < 2 || depth < 1) throw std::invalid_argument("residue_table: need k >= 2, depth >= 1");
    CongruenceTable table;
    table.modulus = k;
    table.depth = depth;
    table.rows.resize(static_cast<std::size_t>(k));
    for (long r = 1; r <= k; ++r) {
        auto& row = table.rows[static_cast<std::size_t>(r - 1)];
        row.reserve(static_cast<std::size_t>(depth));
        for (long l = 0; l < depth; ++l) {
            row.push_back(mod_nonneg_u64(term(l * k + r), static_cast<std::uint64_t>(k)));
        }
    }
    return table;
}

CongruenceTable residue_table_v(long k, long depth) {
    if (k < 2 || depth < 1) throw std::invalid_argument("residue_table: need k >= 2, depth >= 1");
    CongruenceTable table;
    table.modulus = k;
    table.depth = depth;
    table.rows.resize(static_cast<std::size_t>(k));
    for (long r = 1; r <= k; ++r) {
        auto& row = table.rows[static_cast<std::size_t>(r - 1)];
        row.reserve(static_cast<std::size_t>(depth));
        for (long l = 0; l < depth; ++l) {
            row.push_back(v_mod(l * k + r, static_cast<std::uint64_t>(k)));
        }
    }
    return table;
}

TheoremReport check_theorem1(int part, long k, long depth) {
    if (k < 2 || depth < 1) throw std::invalid_argument("check_theorem1: need k >= 2, depth >= 1");
    const auto uk = static_cast<std::uint64_t>(k);
    TheoremReport rep = make_report("theorem1.part" + std::to_string(part),
                                    "k=" + std::to_string(k) + " depth=" + std::to_string(depth));
    const long q = power_of_two_exponent(k);

    auto require_prime = [&](long min_k) {
        if (k < min_k || !is_prime(k)) {
            throw std::invalid_argument("check_theorem1: part " + std::to_string(part) +
                                        " needs prime k >= " + std::to_string(min_k));
        }
    };
    auto require_depth = [&](long min_depth) {
        if (depth < min_depth) {
            throw std::invalid_argument("check_theorem1: part " + std::to_string(part) +
                                        " needs depth >= " + std::to_string(min_depth));
        }
    };
    auto require_power_of_two = [&](long min_k) {
        if (q < 0 || k < min_k) {
            throw std::invalid_argument("check_theorem1: part " + std::to_string(part) +
                                        " needs k a power of two, k >= " + std::to_string(min_k));
        }
    };

    switch (part) {
        case 1:
            for (long n = 1; n <= k * depth; ++n) {
                if (v_mod(n, 2) != 1) {
                    fail(rep, "n=" + std::to_string(n), "odd", "even");
                }
            }
            break;
        case 2:
            for (long l = 0; l < depth; ++l) {
                std::uint64_t a = v_mod(l * k + 1, uk);
                std::uint64_t b = v_mod(l * k + 2, uk);
                if (a != b) fail(rep, "l=" + std::to_string(l), u64_str(a), u64_str(b));
            }
            break;
        case 3: {
            if (k % 2 != 0) throw std::invalid_argument("check_theorem1: part 3 needs even k");
            for (long l = 0; l < depth; ++l) {
                std::uint64_t a = v_mod(l * k + k / 2 + 1, uk);
                std::uint64_t b = v_mod(l * k + k / 2 + 2, uk);
                if (a != b) fail(rep, "l=" + std::to_string(l), u64_str(a), u64_str(b));
            }
            break;
        }
        case 4: {
            if (k % 2 == 0) throw std::invalid_argument("check_theorem1: part 4 needs odd k");
            const long r = (k + 3) / 2;
            for (long l = 0; l < depth; ++l) {
                std::uint64_t a = v_mod(l * k + r, uk);
                if (a != 0) fail(rep, "l=" + std::to_string(l), "0", u64_str(a));
            }
            break;
        }
        case 5: {
            require_prime(2);
            require_depth(k + 2);
            for (long l = 0; l <= k + 1; ++l) {
                std::uint64_t expected = l < 2 ? 1 : uk - 1;
                for (long r = 1; r <= 2; ++r) {
                    std::uint64_t a = v_mod(l * k + r, uk);
                    if (a != expected) {
                        fail(rep, "row=" + std::to_string(r) + " l=" + std::to_string(l),
                             u64_str(expected), u64_str(a));
                    }
                }
            }
            break;
        }
        case 6: {
            require_prime(3);
            for (long r = (k + 3) / 2; r <= k; ++r) {
                std::uint64_t a = v_mod(r, uk);
                if (a != 0) fail(rep, "row=" + std::to_string(r) + " l=0", "0", u64_str(a));
            }
            break;
        }
        case 7: {
            require_prime(3);
            require_depth(k + 1);
            for (long r = (k + 3) / 2; r <= k; ++r) {
                for (long l = (k - 1) / 2; l <= k; ++l) {
                    std::uint64_t a = v_mod(l * k + r, uk);
                    if (a != 0) {
                        fail(rep, "row=" + std::to_string(r) + " l=" + std::to_string(l), "0",
                             u64_str(a));
                    }
                }
            }
            break;
        }
        case 8: {
            require_power_of_two(2);
            std::map<std::uint64_t, int> counts;
            for (long r = 1; r <= k; ++r) {
                std::uint64_t constant = v_mod(r, uk);
                counts[constant] += 1;
                for (long l = 1; l < depth; ++l) {
                    std::uint64_t a = v_mod(l * k + r, uk);
                    if (a != constant) {
                        fail(rep, "row=" + std::to_string(r) + " l=" + std::to_string(l),
                             u64_str(constant), u64_str(a));
                    }
                }
            }
            for (std::uint64_t residue = 1; residue < uk; residue += 2) {
                int seen = counts.count(residue) ? counts[residue] : 0;
                if (seen != 2) {
                    fail(rep, "residue=" + u64_str(residue), "2 occurrences",
                         std::to_string(seen) + " occurrences");
                }
            }
            break;
        }
        case 9: {
            require_power_of_two(4);
            const long h = k / 2;
            const std::vector<std::pair<long, std::uint64_t>> claims = {
                {1, 1},
                {2, 1},
                {h, static_cast<std::uint64_t>(h - 1)},
                {h + 1, static_cast<std::uint64_t>(h + 1)},
                {h + 2, static_cast<std::uint64_t>(h + 1)},
                {k, static_cast<std::uint64_t>(k - 1)}};
            for (const auto& [r, expected] : claims) {
                for (long l = 0; l < depth; ++l) {
                    std::uint64_t a = v_mod(l * k + r, uk);
                    if (a != expected) {
                        fail(rep, "row=" + std::to_string(r) + " l=" + std::to_string(l),
                             u64_str(expected), u64_str(a));
                    }
                }
            }
            break;
        }
        case 10: {
            require_power_of_two(4);
            const long h = k / 2;
            const auto uh = static_cast<std::uint64_t>(h);
            for (long a = 1; a <= h; ++a) {
                for (long l = 0; l < depth; ++l) {
                    std::uint64_t lowr = v_mod(l * k + a, uk);
                    std::uint64_t highr = v_mod(l * k + a + h, uk);
                    std::uint64_t diff = (highr + uk - lowr) % uk;
                    if (diff != uh) {
                        fail(rep, "row=" + std::to_string(a) + " l=" + std::to_string(l),
                             u64_str(uh), u64_str(diff));
                    }
                }
            }
            break;
        }
        default:
            throw std::invalid_argument("check_theorem1: part must be 1..10");
    }
    return rep;
}

TheoremReport check_divisibility_cube(long n_from, long n_to) {
    if (n_from < 2 || n_from > n_to) {
        throw std::invalid_argument("check_divisibility_cube: need 2 <= n_from <= n_to");
    }
    TheoremReport rep = make_report(
        "lemma.cube", "n=" + std::to_string(n_from) + ".." + std::to_string(n_to));
    for (long n = n_from; n <= n_to; ++n) {
        const auto d = static_cast<std::uint64_t>(2 * n - 3);
        std::uint64_t m = d * d * d;
        std::uint64_t a = v_mod(n, m);
        if (a != 0) {
            fail(rep, "n=" + std::to_string(n), "0 mod (2n-3)^3", u64_str(a));
        }
    }
    return rep;
}

TheoremReport check_lemma4(long k, long l) {
    if (k < 3 || k % 2 == 0 || l < 0) {
        throw std::invalid_argument("check_lemma4: need odd k >= 3 and l >= 0");
    }
    TheoremReport rep =
        make_report("lemma4", "k=" + std::to_string(k) + " l=" + std::to_string(l));
    const long n = l * k + (k + 3) / 2;
    Integer modulus = Integer(2 * l + 1) * Integer(2 * l + 1) *
                      int_pow(Integer(k), static_cast<unsigned long>(2 * l + 2));
    Integer v = v_defn(n);
    if (!divides(modulus, v)) {
        fail(rep, "n=" + std::to_string(n), "0 mod (2l+1)^2 k^(2l+2)",
             to_string(mod_nonneg(v, modulus)));
    }
    return rep;
}

TheoremReport check_extra1_part1(long p) {
    if (p < 5 || !is_prime(p)) {
        throw std::invalid_argument("check_extra1_part1: need prime p >= 5");
    }
    TheoremReport rep = make_report("extra1.part1", "p=" + std::to_string(p));
    const Integer pz(p);
    const Integer v = v_defn((p + 3) / 2);

    const Integer m4 = int_pow(pz, 4);
    Integer rhs4 = mod_nonneg(Integer(-2) * int_pow(pz, 3), m4);
    Integer lhs4 = mod_nonneg(v, m4);
    if (lhs4 != rhs4) {
        fail(rep, "mod p^4", to_string(rhs4), to_string(lhs4));
    }

    const Integer m5 = int_pow(pz, 5);
    Integer pow4;
    Integer base(4), exp(p - 1);
    mpz_powm(pow4.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m5.get_mpz_t());
    Integer rhs5 = mod_nonneg(
        Integer(2) * int_pow(pz, 3) * Integer(1 - p) *
            factorial(static_cast<unsigned long>(p - 1)) * pow4,
        m5);
    Integer lhs5 = mod_nonneg(v, m5);
    if (lhs5 != rhs5) {
        fail(rep, "mod p^5", to_string(rhs5), to_string(lhs5));
    }
    return rep;
}

CrConstant cr_constant(long r) {
    if (r < 1) throw std::invalid_argument("cr_constant: need r >= 1");
    CrConstant out;
    out.r = r;

    IntPoly b = IntPoly::constant(Integer(1));
    for (long a = 1; a <= 2 * r; ++a) {
        b.mul_linear(Integer(2 * r + 1 - a), Integer(a));
    }
    for (long j = 0; j <= 2 * r; ++j) {
        out.b_row.push_back(b.coeff(static_cast<std::size_t>(j)));
    }

    Integer sum(0);
    for (long j = 0; j <= 2 * r; ++j) {
        Integer bracket(1);
        for (long t = 1; t <= 2 * r - 1; ++t) {
            bracket *= Integer(1 - 2 * j + 2 * t - 2);
        }
        sum += out.b_row[static_cast<std::size_t>(j)] * bracket;
    }

    Rational ratio = rat(Integer(2 * r + 1), factorial(static_cast<unsigned long>(r)));
    out.value = rat(Integer(r), int_pow(Integer(-4), static_cast<unsigned long>(r - 1))) *
                ratio * ratio * rat(sum);
    return out;
}

TheoremReport check_extra1_part2(long r, long p) {
    if (r < 1 || p < 3 || !is_prime(p)) {
        throw std::invalid_argument("check_extra1_part2: need r >= 1 and odd prime p");
    }
    TheoremReport rep =
        make_report("extra1.part2", "r=" + std::to_string(r) + " p=" + std::to_string(p));
    rep.asserted = p >= 2 * r + 1;

    const Integer pz(p);
    const Integer m = int_pow(pz, static_cast<unsigned long>(2 * r + 3));
    const CrConstant cr = cr_constant(r);
    Integer num(cr.value.get_num());
    Integer den(cr.value.get_den());

    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::invalid_argument("check_extra1_part2: C_r denominator not invertible mod p");
    }
    Integer rhs = mod_nonneg(num * inv * int_pow(pz, static_cast<unsigned long>(2 * r + 2)), m);
    Integer lhs = mod_nonneg(v_defn((p + 3) / 2 + r * p), m);
    if (lhs != rhs) {
        fail(rep, "n=" + std::to_string((p + 3) / 2 + r * p), to_string(rhs), to_string(lhs));
    }
    return rep;
}

TheoremReport check_catalan_mod3(long k_from, long k_to) {
    if (k_from < 0 || k_from > k_to) {
        throw std::invalid_argument("check_catalan_mod3: bad range");
    }
    TheoremReport rep = make_report(
        "lemma.catalan_mod3", "k=" + std::to_string(k_from) + ".." + std::to_string(k_to));
    for (long k = k_from; k <= k_to; ++k) {
        Integer catalan = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
        Integer divisor(k + 1);
        mpz_divexact(catalan.get_mpz_t(), catalan.get_mpz_t(), divisor.get_mpz_t());
        std::uint64_t expected = mod_nonneg_u64(catalan, 3);
        for (long offset = 1; offset <= 2; ++offset) {
            std::uint64_t a = v_mod(offset + 3 * k, 3);
            if (a != expected) {
                fail(rep, "n=" + std::to_string(offset + 3 * k), u64_str(expected), u64_str(a));
            }
        }
        if (k >= 1) {
            std::uint64_t a = v_mod(3 * k, 3);
            if (a != 0) fail(rep, "n=" + std::to_string(3 * k), "0", u64_str(a));
        }
    }
    return rep;
}

ModPoly product_linear_mod(long count, long j, std::uint64_t modulus, long start) {
    if (count < 0 || modulus < 2) {
        throw std::invalid_argument("product_linear_mod: need count >= 0, modulus >= 2");
    }
    ModPoly p = ModPoly::constant(ModInt(1, modulus));
    for (long i = start; i < start + count; ++i) {
        ModInt a(mod_nonneg_u64(Integer(j) - Integer(i), modulus), modulus);
        ModInt b(mod_nonneg_u64(Integer(i), modulus), modulus);
        p.mul_linear(a, b);
    }
    return p;
}

namespace {

// First coefficient where the two polynomials differ mod their modulus.
void compare_mod_polys(TheoremReport& rep, const ModPoly& actual, const ModPoly& expected,
                       std::uint64_t modulus) {
    long top = std::max(actual.degree(), expected.degree());
    for (long m = 0; m <= top; ++m) {
        ModInt a = actual.coeff(static_cast<std::size_t>(m));
        ModInt e = expected.coeff(static_cast<std::size_t>(m));
        std::uint64_t av = a.modulus == modulus ? a.value : a.value % modulus;
        std::uint64_t ev = e.modulus == modulus ? e.value : e.value % modulus;
        if (av != ev) {
            fail(rep, "coeff x^" + std::to_string(m), u64_str(ev), u64_str(av));
        }
    }
}

}  // namespace

TheoremReport check_lemma12(long q, long j) {
    if (q < 1 || j % 2 == 0) {
        throw std::invalid_argument("check_lemma12: need q >= 1 and odd j");
    }
    TheoremReport rep =
        make_report("lemma12", "q=" + std::to_string(q) + " j=" + std::to_string(j));
    const std::uint64_t m = std::uint64_t{1} << q;
    ModPoly p = product_linear_mod(static_cast<long>(m), j, m);
    ModPoly square = poly_mul(p, p);
    std::vector<ModInt> expected(static_cast<std::size_t>(m) + 1, ModInt(0, m));
    expected.back() = ModInt(1, m);
    compare_mod_polys(rep, square, ModPoly::from_coefficients(std::move(expected)), m);
    return rep;
}

TheoremReport check_lemma13a(long q, long j) {
    if (q < 1 || j % 2 == 0) {
        throw std::invalid_argument("check_lemma13a: need q >= 1 and odd j");
    }
    TheoremReport rep =
        make_report("lemma13a", "q=" + std::to_string(q) + " j=" + std::to_string(j));
    const long count = 1L << q;
    const std::uint64_t m = std::uint64_t{1} << (q + 1);
    ModPoly first = product_linear_mod(count, j, m, 0);
    ModPoly second = product_linear_mod(count, j, m, count);
    compare_mod_polys(rep, second, first, m);
    return rep;
}

TheoremReport check_lemma13b(long q, long j) {
    if (q < 3 || j % 2 == 0) {
        throw std::invalid_argument("check_lemma13b: need q >= 3 and odd j");
    }
    TheoremReport rep =
        make_report("lemma13b", "q=" + std::to_string(q) + " j=" + std::to_string(j));
    const std::uint64_t m = std::uint64_t{1} << q;
    const std::uint64_t h = m / 2;
    ModPoly p = product_linear_mod(static_cast<long>(m), j, m);
    std::vector<ModInt> expected(static_cast<std::size_t>(h) + 3, ModInt(0, m));
    expected[static_cast<std::size_t>(h) - 2] = ModInt(h, m);
    expected[static_cast<std::size_t>(h) - 1] = ModInt(h, m);
    expected[static_cast<std::size_t>(h)] = ModInt(1, m);
    expected[static_cast<std::size_t>(h) + 1] = ModInt(h, m);
    expected[static_cast<std::size_t>(h) + 2] = ModInt(h, m);
    compare_mod_polys(rep, p, ModPoly::from_coefficients(std::move(expected)), m);
    return rep;
}

TheoremReport check_lemma_carl(long p, long l) {
    if (!is_prime(p) || l < 1) {
        throw std::invalid_argument("check_lemma_carl: need prime p and l >= 1");
    }
    TheoremReport rep =
        make_report("lemma.carl", "p=" + std::to_string(p) + " l=" + std::to_string(l));
    Integer count_z = int_pow(Integer(p), static_cast<unsigned long>(l));
    const long count = static_cast<long>(count_z.get_si());
    const auto m = static_cast<std::uint64_t>(count);
    for (long j = 0; j < p; ++j) {
        ModPoly base = product_linear_mod(count, j, m);
        for (long shift = 1; shift <= 2; ++shift) {
            ModPoly other = product_linear_mod(count, j + shift * p, m);
            if (!(other == base)) {
                fail(rep, "j=" + std::to_string(j) + " vs j=" + std::to_string(j + shift * p),
                     "identical polynomials mod p^l", "coefficient mismatch");
            }
        }
    }
    return rep;
}

TheoremReport check_periodicity_equidistribution(long q) {
    if (q < 1) throw std::invalid_argument("check_periodicity_equidistribution: need q >= 1");
    TheoremReport rep = make_report("lemma.periodicity_equidistribution", "q=" + std::to_string(q));
    const std::uint64_t k = std::uint64_t{1} << q;
    const long lk = static_cast<long>(k);
    for (long i = 0; i < lk; ++i) {
        std::uint64_t shifted = v_mod(lk + i, k);
        std::uint64_t base = v_mod(i, k);
        if (shifted != base) {
            fail(rep, "i=" + std::to_string(i), u64_str(base), u64_str(shifted));
        }
    }
    std::map<std::uint64_t, int> counts;
    for (long i = 1; i <= lk; ++i) {
        counts[v_mod(i, k)] += 1;
    }
    for (std::uint64_t residue = 1; residue < k; residue += 2) {
        int seen = counts.count(residue) ? counts[residue] : 0;
        if (seen != 2) {
            fail(rep, "residue=" + u64_str(residue), "2 occurrences",
                 std::to_string(seen) + " occurrences");
        }
    }
    return rep;
}

std::uint64_t binomial_mod_lucas(const Integer& n, const Integer& m, std::uint64_t p) {
    if (!is_prime(static_cast<long>(p))) {
        throw std::invalid_argument("binomial_mod_lucas: composite modulus");
    }
    if (n < 0 || m < 0) throw std::invalid_argument("binomial_mod_lucas: negative argument");
    if (m > n) return 0;
    Integer nn = n, mm = m;
    std::uint64_t acc = 1 % p;
    while (nn > 0 || mm > 0) {
        std::uint64_t nd = mpz_fdiv_ui(nn.get_mpz_t(), p);
        std::uint64_t md = mpz_fdiv_ui(mm.get_mpz_t(), p);
        if (md > nd) return 0;
        acc = (ModInt(acc, p) * ModInt(mod_nonneg_u64(binomial(nd, md), p), p)).value;
        nn /= p;
        mm /= p;
    }
    return acc;
}

}  // namespace enumseq
