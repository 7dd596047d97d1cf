#include "fricke/field.hpp"

#include <array>

namespace fricke {

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for n < 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
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

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
    if (p >= kMaxModulus) throw std::invalid_argument("modulus must be below 2^62");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

namespace {

// Jacobi symbol (a/n) for odd n > 0 and 0 <= a < n.
int jacobi(u64 a, u64 n) {
    int sign = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

}  // namespace

int legendre_symbol(long long a, const PrimeModulus& p) {
    const u64 m = p.value();
    if (m == 2) throw std::invalid_argument("legendre_symbol needs an odd prime");
    long long r = a % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return jacobi(static_cast<u64>(r), m);
}

int legendre_symbol(const mpz_class& a, const PrimeModulus& p) {
    const u64 m = p.value();
    if (m == 2) throw std::invalid_argument("legendre_symbol needs an odd prime");
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
    return jacobi(r.get_ui(), m);
}

PrimeField::Element PrimeField::pow(Element a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), mpz_class(-e));
    mpz_class r;
    mpz_class base(static_cast<unsigned long>(a));
    mpz_class mod(static_cast<unsigned long>(p_));
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r.get_ui();
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Extended Euclid on signed 128-bit to stay exact for p < 2^62.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<u64>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<u64>(r);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
    return r.get_ui();
}

QuadExtension::QuadExtension(const PrimeModulus& p, u64 nonresidue)
    : base_(p), c_(nonresidue % p.value()) {
    if (p.value() == 2) throw std::invalid_argument("no quadratic extension representation for p = 2");
    if (legendre_symbol(static_cast<long long>(c_), p) != -1)
        throw std::invalid_argument("extension constant is not a quadratic nonresidue");
}

QuadExtension::Element QuadExtension::mul(const Element& a, const Element& b) const noexcept {
    const u64 p = base_.characteristic();
    u128 lo = static_cast<u128>(a.a0) * b.a0;
    u128 cross = static_cast<u128>(a.a0) * b.a1 + static_cast<u128>(a.a1) * b.a0;
    u64 hi = mulmod(a.a1, b.a1, p);
    u64 r0 = static_cast<u64>((lo + static_cast<u128>(hi) * c_) % p);
    u64 r1 = static_cast<u64>(cross % p);
    return {r0, r1};
}

QuadExtension::Element QuadExtension::pow(Element a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), mpz_class(-e));
    Element result = one();
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
    }
    return result;
}

u64 QuadExtension::norm(const Element& a) const noexcept {
    // (a0 + a1 t)(a0 - a1 t) = a0^2 - c a1^2
    return base_.sub(base_.mul(a.a0, a.a0), base_.mul(c_, base_.mul(a.a1, a.a1)));
}

QuadExtension::Element QuadExtension::inv(const Element& a) const {
    u64 n = norm(a);
    if (n == 0) throw std::domain_error("inverse of zero in F_{p^2}");
    u64 ni = base_.inv(n);
    Element conj = frobenius(a);
    return {base_.mul(conj.a0, ni), base_.mul(conj.a1, ni)};
}

std::string QuadExtension::to_string(const Element& a) const {
    if (a.a1 == 0) return std::to_string(a.a0);
    return std::to_string(a.a0) + "+" + std::to_string(a.a1) + "t";
}

QuadExtension make_quadratic_extension(const PrimeModulus& p) {
    const u64 m = p.value();
    if (m == 2) throw std::invalid_argument("make_quadratic_extension: p = 2 is not supported");
    if (m % 4 == 3) return QuadExtension(p, m - 1);
    for (u64 c = 2;; ++c) {
        if (legendre_symbol(static_cast<long long>(c), p) == -1) return QuadExtension(p, c);
    }
}

}  // namespace fricke
