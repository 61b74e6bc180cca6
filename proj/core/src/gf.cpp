#include "pcgraph/gf.hpp"

#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "pcgraph/errors.hpp"

namespace pcg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 mod) {
    return static_cast<u64>(u128(a) * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
    u64 result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Floor of the e-th root, exact by local adjustment around the float guess.
u64 iroot(u64 n, unsigned e) {
    if (e == 1) return n;
    u64 r = static_cast<u64>(std::pow(double(n), 1.0 / e));
    auto pow_fits = [&](u64 base) {
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            acc *= base;
            if (acc > n) return false;
        }
        return true;
    };
    while (r > 0 && !pow_fits(r)) --r;
    while (pow_fits(r + 1)) ++r;
    return r;
}

struct PrimePower {
    u64 p;
    unsigned m;
};

// q = p^m with p prime, or nothing.
std::optional<PrimePower> factor_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    if (is_prime_u64(q)) return PrimePower{q, 1};
    for (unsigned e = 2; e <= 63; ++e) {
        u64 r = iroot(q, e);
        if (r < 2) break;
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i) acc *= r;
        if (acc == q && is_prime_u64(r)) return PrimePower{r, e};
    }
    return std::nullopt;
}

// --- polynomials over F_p, coefficient vectors, lowest degree first ---

using Poly = std::vector<u64>;

Poly decode_poly(u64 code, u64 p) {
    Poly c;
    while (code) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

u64 encode_poly(const Poly& c, u64 p) {
    u64 code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

void poly_trim(Poly& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo b (b nonzero, small degrees only).
Poly poly_mod(Poly a, const Poly& b, u64 p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const u64 lead_inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        u64 factor = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) {
            u64 sub = mulmod(factor, b[i], p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    poly_trim(out);
    return out;
}

bool poly_irreducible(const Poly& f, u64 p) {
    const std::size_t m = f.size() - 1;
    if (m < 2) return true;
    // Trial division by every monic polynomial of degree 1..m/2. Candidate
    // counts stay tiny because this only runs for p^m <= 256.
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (u64 tail = 0; tail < count; ++tail) {
            Poly g = decode_poly(tail, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Fixed irreducible moduli for every extension field p^m <= 256, coded in
// base p including the leading coefficient. make_field re-verifies
// irreducibility before building tables.
u64 builtin_modulus(u64 q) {
    switch (q) {
        case 4: return 7;      // x^2+x+1
        case 8: return 11;     // x^3+x+1
        case 16: return 19;    // x^4+x+1
        case 32: return 37;    // x^5+x^2+1
        case 64: return 91;    // x^6+x^4+x^3+x+1
        case 128: return 131;  // x^7+x+1
        case 256: return 285;  // x^8+x^4+x^3+x^2+1
        case 9: return 17;     // x^2+2x+2
        case 27: return 34;    // x^3+2x+1
        case 81: return 137;   // x^4+2x^3+2
        case 243: return 250;  // x^5+2x+1
        case 25: return 47;    // x^2+4x+2
        case 125: return 143;  // x^3+3x+3
        case 49: return 94;    // x^2+6x+3
        case 121: return 200;  // x^2+7x+2
        case 169: return 327;  // x^2+12x+2
        default:
            throw std::logic_error("no builtin modulus for q=" +
                                   std::to_string(q));
    }
}

}  // namespace

struct Field::Rep {
    u64 q = 0;
    u64 p = 0;
    unsigned m = 1;
    u64 modulus = 0;
    // Extension fields only (q <= 256): dense q*q and q lookup tables.
    std::vector<Elem> mul_table;
    std::vector<Elem> inv_table;
};

Field Field::make(u64 q) {
    auto pp = factor_prime_power(q);
    if (!pp) throw NotPrimePower("q=" + std::to_string(q) +
                                 " is not a prime power");
    auto rep = std::make_shared<Rep>();
    rep->q = q;
    rep->p = pp->p;
    rep->m = pp->m;
    if (pp->m == 1) {
        rep->modulus = q;
        return Field(std::move(rep));
    }
    if (q > 256)
        throw UnsupportedExtension("extension field q=" + std::to_string(q) +
                                   " exceeds the table limit of 256");

    rep->modulus = builtin_modulus(q);
    const Poly mod_poly = decode_poly(rep->modulus, rep->p);
    if (!poly_irreducible(mod_poly, rep->p))
        throw std::logic_error("builtin modulus for q=" + std::to_string(q) +
                               " is reducible");

    rep->mul_table.assign(q * q, 0);
    for (u64 a = 0; a < q; ++a) {
        const Poly pa = decode_poly(a, rep->p);
        for (u64 b = a; b < q; ++b) {
            const Poly pb = decode_poly(b, rep->p);
            u64 prod = encode_poly(poly_mod(poly_mul(pa, pb, rep->p),
                                            mod_poly, rep->p),
                                   rep->p);
            rep->mul_table[a * q + b] = prod;
            rep->mul_table[b * q + a] = prod;
        }
    }
    rep->inv_table.assign(q, 0);
    for (u64 a = 1; a < q; ++a) {
        for (u64 b = 1; b < q; ++b) {
            if (rep->mul_table[a * q + b] == 1) {
                rep->inv_table[a] = b;
                break;
            }
        }
        if (rep->inv_table[a] == 0)
            throw std::logic_error("element without inverse in F_" +
                                   std::to_string(q));
    }
    return Field(std::move(rep));
}

Field make_field(u64 q) { return Field::make(q); }

u64 Field::q() const { return rep_->q; }
u64 Field::p() const { return rep_->p; }
unsigned Field::m() const { return rep_->m; }
u64 Field::modulus() const { return rep_->modulus; }

Elem Field::add(Elem a, Elem b) const {
    assert(a < rep_->q && b < rep_->q);
    if (rep_->m == 1)
        return static_cast<Elem>((u128(a) + b) % rep_->p);
    // Digit-wise addition in base p; polynomial addition has no carries.
    Elem out = 0, place = 1;
    const u64 p = rep_->p;
    while (a || b) {
        out += (a % p + b % p) % p * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    assert(a < rep_->q);
    if (rep_->m == 1) return a == 0 ? 0 : rep_->p - a;
    Elem out = 0, place = 1;
    const u64 p = rep_->p;
    while (a) {
        u64 d = a % p;
        out += (d == 0 ? 0 : p - d) * place;
        a /= p;
        place *= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    assert(a < rep_->q && b < rep_->q);
    if (rep_->m == 1) return mulmod(a, b, rep_->p);
    return rep_->mul_table[a * rep_->q + b];
}

Elem Field::inv(Elem a) const {
    assert(a < rep_->q);
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" +
                                     std::to_string(rep_->q));
    if (rep_->m == 1) return powmod(a, rep_->p - 2, rep_->p);
    return rep_->inv_table[a];
}

std::vector<Elem> Field::elements() const {
    if (rep_->q > (u64(1) << 24))
        throw TooLarge("listing " + std::to_string(rep_->q) +
                       " field elements exceeds the 2^24 enumeration guard");
    std::vector<Elem> out(rep_->q);
    for (u64 i = 0; i < rep_->q; ++i) out[i] = i;
    return out;
}

bool operator==(const Field& a, const Field& b) {
    return a.rep_->q == b.rep_->q;
}

}  // namespace pcg
