#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace siltloc {

enum class errc {
    bad_input,
    inconsistent,
    not_finite_dimensional,
    not_admissible,
    not_injective,
    not_in_bl,
    presentation_mismatch,
    oracle_disagreement,
    missing_indecomposable_list,
    not_idempotent_ideal,
    not_two_sided_ideal,
    pd_too_large,
    not_stabilised,
    undecided,
    internal,
};

class error : public std::runtime_error {
  public:
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime field F_p. Elements are canonical residues in [0, p).
/// The descriptor is passed around by value; elements are plain integers.
struct GFp {
    using Elt = std::uint64_t;
    std::uint64_t p = 0;

    GFp() = default;
    explicit GFp(std::uint64_t prime) : p(prime) {
        if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime_u64(p))
            throw error(errc::bad_input, "GFp: modulus must be a prime < 2^31");
    }

    Elt zero() const { return 0; }
    Elt one() const { return p > 1 ? 1 : 0; }
    Elt from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elt>(r);
    }
    Elt add(Elt a, Elt b) const { Elt s = a + b; return s >= p ? s - p : s; }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p; }
    Elt inv(Elt a) const {
        if (a == 0) throw error(errc::bad_input, "GFp: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                     nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elt>(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    std::string str(Elt a) const { return std::to_string(a); }
    bool same(const GFp& o) const { return p == o.p; }
};

/// The rationals with always-reduced fractions (GMP-backed).
struct QQ {
    using Elt = mpq_class;

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    Elt from_int(long long n) const { return Elt(static_cast<long>(n)); }
    Elt add(const Elt& a, const Elt& b) const { Elt r = a + b; r.canonicalize(); return r; }
    Elt sub(const Elt& a, const Elt& b) const { Elt r = a - b; r.canonicalize(); return r; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { Elt r = a * b; r.canonicalize(); return r; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw error(errc::bad_input, "QQ: inverse of zero");
        return Elt(1) / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    std::string str(const Elt& a) const { return a.get_str(); }
    bool same(const QQ&) const { return true; }
};

} // namespace siltloc
