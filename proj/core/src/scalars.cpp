#include "evoalg/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "evoalg/error.hpp"

namespace evoalg {

namespace {

using QPoly = std::vector<mpq_class>;
using Value = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>>;

constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 31;
constexpr std::uint64_t kLogTableLimit = 1'000'000;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {0};
    IntPoly quo(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        mpz_class c = num[i];
        quo[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
    }
    return quo;
}

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic integer polynomial phi, padded to deg(phi).
void reduce_mod(QPoly& a, const IntPoly& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        if (a[i] == 0) continue;
        mpq_class c = a[i];
        for (std::size_t t = 0; t <= d; ++t) a[i - d + t] -= c * phi[t];
    }
    a.resize(d);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Quotient and remainder over Q[x]; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1);
    const mpq_class lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        mpq_class c = a[i] / lead;
        q[i - (b.size() - 1)] = c;
        for (std::size_t t = 0; t < b.size(); ++t) a[i - (b.size() - 1) + t] -= c * b[t];
    }
    trim(a);
    return {q, a};
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

mpq_class rational_determinant(std::vector<std::vector<mpq_class>> m) {
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

// Exact k-th root of a nonnegative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& v, std::uint64_t k) {
    if (v < 0) return std::nullopt;
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k)) == 0) {
        return std::nullopt;
    }
    return r;
}

// Positive rational r with r^k == |q|, if one exists.
std::optional<mpq_class> rational_abs_root(const mpq_class& q, std::uint64_t k) {
    auto num = exact_root(abs(q.get_num()), k);
    if (!num) return std::nullopt;
    auto den = exact_root(q.get_den(), k);
    if (!den) return std::nullopt;
    mpq_class r(*num, *den);
    r.canonicalize();
    return r;
}

std::string trim_copy(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

void require_digits(std::string_view s, std::string_view what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    require_digits(s, what);
    if (s.size() > 18) throw ParseError(std::string(what) + " too large: " + std::string(s));
    return std::stoull(std::string(s));
}

}  // namespace

namespace detail {

struct FieldData {
    FieldDescriptor desc;
    std::size_t degree = 1;
    std::uint64_t characteristic = 0;
    IntPoly phi;

    // GF(p)
    std::uint64_t p = 0;
    std::uint64_t primitive_root = 0;
    std::vector<std::uint32_t> log_table;  // log_table[x], x in [1, p)

    // Root-of-unity group mu_N = <generator>
    std::uint64_t rou_order = 0;
    std::vector<std::uint64_t> rou_order_primes;
    Value generator;
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FieldData> build_field(const FieldDescriptor& desc) {
    auto data = std::make_shared<detail::FieldData>();
    data->desc = desc;
    switch (desc.kind) {
        case FieldKind::Rationals:
            data->rou_order = 2;
            data->generator = mpq_class(-1);
            break;
        case FieldKind::PrimeField: {
            const std::uint64_t p = desc.modulus;
            if (p >= kPrimeLimit || !is_prime(p)) {
                throw DomainError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
            }
            data->p = p;
            data->characteristic = p;
            data->rou_order = p - 1;
            std::uint64_t g = 1;
            if (p > 2) {
                const auto qs = prime_factors(p - 1);
                for (g = 2;; ++g) {
                    bool ok = std::all_of(qs.begin(), qs.end(),
                                          [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; });
                    if (ok) break;
                }
            }
            data->primitive_root = g;
            data->generator = g;
            if (p <= kLogTableLimit) {
                data->log_table.assign(p, 0);
                std::uint64_t x = 1;
                for (std::uint64_t e = 0; e + 1 < p; ++e) {
                    data->log_table[x] = static_cast<std::uint32_t>(e);
                    x = x * g % p;
                }
            }
            break;
        }
        case FieldKind::Cyclotomic: {
            const std::uint64_t m = desc.modulus;
            if (m == 0) throw DomainError("cyclotomic conductor must be positive");
            data->phi = cyclotomic_polynomial(m);
            data->degree = data->phi.size() - 1;
            data->rou_order = (m % 2 == 0) ? m : 2 * m;
            QPoly z(data->degree);
            if (data->degree == 1) {
                // m == 2: zeta = -1
                z[0] = -mpz_class(data->phi[0]);
            } else {
                z[1] = 1;
            }
            if (m % 2 != 0) {
                for (auto& c : z) c = -c;
            }
            data->generator = z;
            break;
        }
    }
    data->rou_order_primes = prime_factors(data->rou_order);
    return data;
}

std::shared_ptr<const detail::FieldData> lookup_field(const FieldDescriptor& desc) {
    static std::mutex mu;
    static std::map<FieldDescriptor, std::shared_ptr<const detail::FieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(desc);
    if (it != cache.end()) return it->second;
    auto data = build_field(desc);
    cache.emplace(desc, data);
    return data;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor FieldDescriptor::rationals() { return {FieldKind::Rationals, 0}; }

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) { return {FieldKind::PrimeField, p}; }

FieldDescriptor FieldDescriptor::cyclotomic(std::uint64_t m) {
    if (m == 0) throw DomainError("cyclotomic conductor must be positive");
    if (m == 1) return rationals();
    return {FieldKind::Cyclotomic, m};
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    const std::string s = trim_copy(text);
    if (s == "Q") return rationals();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        auto p = parse_u64(std::string_view(s).substr(3, s.size() - 4), "prime");
        if (p >= kPrimeLimit || !is_prime(p)) throw ParseError("GF(p) needs a prime p < 2^31: " + s);
        return prime_field(p);
    }
    if (s.rfind("Q(zeta_", 0) == 0 && s.back() == ')') {
        auto m = parse_u64(std::string_view(s).substr(7, s.size() - 8), "conductor");
        if (m == 0) throw ParseError("cyclotomic conductor must be positive: " + s);
        return cyclotomic(m);
    }
    throw ParseError("unknown field descriptor '" + std::string(text) + "'");
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "GF(" + std::to_string(modulus) + ")";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(modulus) + ")";
    }
    return "?";
}

IntPoly cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0) throw DomainError("cyclotomic_polynomial: m must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, IntPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
    }
    IntPoly num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (std::uint64_t d = 1; d < m; ++d) {
        if (m % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(m, num);
    return num;
}

// ---------------------------------------------------------------------------
// Field

Field::Field() {
    static const auto q = lookup_field(FieldDescriptor::rationals());
    data_ = q;
}

Field::Field(const FieldDescriptor& desc) : data_(lookup_field(desc)) {}

const FieldDescriptor& Field::descriptor() const { return data_->desc; }

std::size_t Field::degree() const { return data_->degree; }

std::uint64_t Field::characteristic() const { return data_->characteristic; }

const IntPoly& Field::cyclotomic_modulus() const { return data_->phi; }

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

Scalar Field::from_rational(const mpq_class& q0) const {
    mpq_class q = q0;
    q.canonicalize();
    switch (data_->desc.kind) {
        case FieldKind::Rationals: return Scalar(*this, q);
        case FieldKind::PrimeField: {
            const mpz_class p(std::to_string(data_->p));
            mpz_class den = q.get_den() % p;
            if (den == 0) throw DomainError("denominator vanishes in " + name() + ": " + q.get_str());
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            mpz_class r = (q.get_num() * inv) % p;
            if (r < 0) r += p;
            return Scalar(*this, static_cast<std::uint64_t>(r.get_ui()));
        }
        case FieldKind::Cyclotomic: {
            QPoly c(data_->degree);
            c[0] = q;
            return Scalar(*this, c);
        }
    }
    throw DomainError("unreachable");
}

Scalar Field::from_residue(std::uint64_t v) const {
    if (!is_prime_field()) throw DomainError("from_residue needs GF(p), field is " + name());
    return Scalar(*this, v % data_->p);
}

Scalar Field::from_coefficients(std::vector<mpq_class> coeffs) const {
    if (!is_cyclotomic()) {
        trim(coeffs);
        if (coeffs.size() > 1) throw DomainError("coefficient vector has z-terms but field is " + name());
        return from_rational(coeffs.empty() ? mpq_class(0) : coeffs[0]);
    }
    for (auto& c : coeffs) c.canonicalize();
    if (coeffs.size() < data_->degree) coeffs.resize(data_->degree);
    reduce_mod(coeffs, data_->phi);
    return Scalar(*this, std::move(coeffs));
}

Scalar Field::zeta() const {
    if (!is_cyclotomic()) {
        if (is_rationals()) return one();
        throw DomainError("zeta is not defined for " + name());
    }
    QPoly z(data_->degree + 1);
    z[1] = 1;
    return from_coefficients(std::move(z));
}

Scalar Field::parse_scalar(std::string_view text) const {
    const std::string s = trim_copy(text);
    if (s.empty()) throw ParseError("empty scalar");
    Scalar total = zero();
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in scalar '" + s + "'");
        }
        first = false;
        std::size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw ParseError("empty term in scalar '" + s + "'");

        mpq_class coef = 1;
        std::string mono;
        auto zpos = term.find('z');
        std::string coef_text = term.substr(0, zpos);
        if (zpos != std::string::npos) {
            mono = term.substr(zpos);
            if (!coef_text.empty()) {
                if (coef_text.back() != '*') throw ParseError("expected '*' before z in '" + term + "'");
                coef_text.pop_back();
                if (coef_text.empty()) throw ParseError("missing coefficient in '" + term + "'");
            }
        }
        if (!coef_text.empty()) {
            auto slash = coef_text.find('/');
            std::string num = coef_text.substr(0, slash);
            std::string den = slash == std::string::npos ? "1" : coef_text.substr(slash + 1);
            require_digits(num, "numerator");
            require_digits(den, "denominator");
            coef = mpq_class(mpz_class(num), mpz_class(den));
            if (coef.get_den() == 0) throw ParseError("zero denominator in '" + term + "'");
            coef.canonicalize();
        }
        Scalar value = from_rational(negative ? mpq_class(-coef) : coef);
        if (!mono.empty()) {
            std::uint64_t e = 1;
            if (mono.size() > 1) {
                if (mono[1] != '^') throw ParseError("bad monomial '" + mono + "'");
                e = parse_u64(std::string_view(mono).substr(2), "exponent");
            }
            if (!is_cyclotomic()) throw ParseError("'z' is only meaningful over Q(zeta_m), field is " + name());
            value *= zeta().pow(e % data_->desc.modulus);
        }
        total += value;
    }
    return total;
}

RootOfUnityGroup Field::root_of_unity_group() const {
    return {data_->rou_order, Scalar(*this, data_->generator)};
}

std::vector<Scalar> Field::roots_of_unity(std::uint64_t k) const {
    if (k == 0) throw DomainError("roots_of_unity: k must be positive");
    const std::uint64_t n = data_->rou_order;
    const std::uint64_t count = std::gcd(k, n);
    const Scalar h = Scalar(*this, data_->generator).pow(n / count);
    std::vector<Scalar> out;
    out.reserve(count);
    Scalar x = one();
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(x);
        x *= h;
    }
    return out;
}

std::optional<std::uint64_t> Field::mult_order(const Scalar& x) const {
    if (x.field() != *this) throw MismatchError("mult_order: scalar from " + x.field().name() + ", field " + name());
    if (x.is_zero()) throw DomainError("mult_order of zero");
    std::uint64_t order = data_->rou_order;
    if (!x.pow(order).is_one()) return std::nullopt;
    for (auto q : data_->rou_order_primes) {
        while (order % q == 0 && x.pow(order / q).is_one()) order /= q;
    }
    return order;
}

std::optional<std::uint64_t> Field::root_of_unity_log(const Scalar& u) const {
    if (u.is_zero()) return std::nullopt;
    const std::uint64_t n = data_->rou_order;
    if (is_prime_field()) {
        const std::uint64_t p = data_->p;
        const std::uint64_t x = u.residue();
        if (!data_->log_table.empty()) return data_->log_table[x];
        // baby-step giant-step
        const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
        std::unordered_map<std::uint64_t, std::uint64_t> baby;
        std::uint64_t cur = 1;
        for (std::uint64_t j = 0; j < m; ++j) {
            baby.emplace(cur, j);
            cur = cur * data_->primitive_root % p;
        }
        const std::uint64_t giant = powmod(powmod(data_->primitive_root, m, p), p - 2, p);
        std::uint64_t y = x;
        for (std::uint64_t i = 0; i <= m; ++i) {
            auto it = baby.find(y);
            if (it != baby.end()) return (i * m + it->second) % n;
            y = y * giant % p;
        }
        return std::nullopt;
    }
    if (!u.pow(n).is_one()) return std::nullopt;
    const Scalar g(*this, data_->generator);
    Scalar cur = one();
    for (std::uint64_t e = 0; e < n; ++e) {
        if (cur == u) return e;
        cur *= g;
    }
    return std::nullopt;
}

KthRoots Field::kth_roots(const Scalar& c, std::uint64_t k) const {
    if (c.field() != *this) throw MismatchError("kth_roots: scalar from " + c.field().name() + ", field " + name());
    if (c.is_zero()) throw DomainError("kth_roots: c must be nonzero");
    if (k == 0) throw DomainError("kth_roots: k must be positive");
    const std::uint64_t n = data_->rou_order;
    const Scalar g(*this, data_->generator);

    auto sorted = [](std::vector<Scalar> v) {
        std::sort(v.begin(), v.end());
        return KthRoots{true, std::move(v), {}};
    };

    // c = g^L: solve k*y = L (mod N)
    auto solve_in_mu = [&](const Scalar& u) -> std::optional<std::vector<Scalar>> {
        auto log = root_of_unity_log(u);
        if (!log) return std::nullopt;
        const std::uint64_t d = std::gcd(k, n);
        std::vector<Scalar> out;
        if (*log % d != 0) return out;
        const std::uint64_t nd = n / d;
        const std::uint64_t kd = (k / d) % nd;
        const std::uint64_t ld = (*log / d) % nd;
        std::uint64_t y0 = 0;
        if (nd > 1) {
            mpz_class inv, kk(std::to_string(kd)), mm(std::to_string(nd));
            mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), mm.get_mpz_t());
            mpz_class y = (inv * mpz_class(std::to_string(ld))) % mm;
            y0 = std::stoull(y.get_str());
        }
        const Scalar step = g.pow(nd);
        Scalar x = g.pow(y0);
        for (std::uint64_t t = 0; t < d; ++t) {
            out.push_back(x);
            x *= step;
        }
        return out;
    };

    if (auto roots = solve_in_mu(c)) return sorted(std::move(*roots));

    // Characteristic zero from here on: c is not a root of unity.
    // Try c = q * u with q rational and u a root of unity.
    const Scalar g_inv = g.inverse();
    Scalar w = c;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (auto q = w.as_rational()) {
            const Scalar u = g.pow(i);
            if (auto r = rational_abs_root(*q, k)) {
                const Scalar sign_u = (*q < 0) ? -u : u;
                auto ys = solve_in_mu(sign_u);
                std::vector<Scalar> out;
                for (const auto& y : *ys) out.push_back(from_rational(*r) * y);
                return sorted(std::move(out));
            }
            // k odd: x^k in Q*mu forces x in Q*mu (|x|^2 is rational in an
            // abelian field, so x^2 in Q*mu), hence |q| must be a k-th power.
            if (k % 2 == 1) return {true, {}, {}};
            break;
        }
        w *= g_inv;
    }

    // Norm obstruction: N(x)^k = N(c) with N(x) rational.
    const mpq_class nc = c.norm();
    const bool sign_ok = nc > 0 || (k % 2 == 1);
    if (!sign_ok || !rational_abs_root(nc, k)) return {true, {}, {}};
    if (degree() == 1) return {true, {}, {}};

    return {false, {}, "x^" + std::to_string(k) + " = " + c.to_string() + " over " + name()};
}

std::vector<Scalar> Field::nonzero_elements() const {
    if (!is_prime_field()) throw DomainError("nonzero_elements needs GF(p), field is " + name());
    std::vector<Scalar> out;
    out.reserve(data_->p - 1);
    for (std::uint64_t v = 1; v < data_->p; ++v) out.push_back(Scalar(*this, v));
    return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : value_(mpq_class(0)) {}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_.data_ != o.field_.data_ && field_.descriptor() != o.field_.descriptor()) {
        throw MismatchError("field mismatch: " + field_.name() + " vs " + o.field_.name());
    }
}

bool Scalar::is_zero() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_) == 0;
        case 1: return std::get<1>(value_) == 0;
        default: {
            const auto& c = std::get<2>(value_);
            return std::all_of(c.begin(), c.end(), [](const mpq_class& q) { return q == 0; });
        }
    }
}

bool Scalar::is_one() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_) == 1;
        case 1: return std::get<1>(value_) == 1 % field_.data_->p;
        default: {
            const auto& c = std::get<2>(value_);
            if (c.empty() || c[0] != 1) return false;
            return std::all_of(c.begin() + 1, c.end(), [](const mpq_class& q) { return q == 0; });
        }
    }
}

bool Scalar::is_rational() const { return as_rational().has_value(); }

std::optional<mpq_class> Scalar::as_rational() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_);
        case 1: return std::nullopt;
        default: {
            const auto& c = std::get<2>(value_);
            if (!std::all_of(c.begin() + 1, c.end(), [](const mpq_class& q) { return q == 0; })) return std::nullopt;
            return c[0];
        }
    }
}

std::uint64_t Scalar::residue() const {
    if (value_.index() != 1) throw DomainError("residue() needs a GF(p) scalar");
    return std::get<1>(value_);
}

const std::vector<mpq_class>& Scalar::coefficients() const {
    if (value_.index() != 2) throw DomainError("coefficients() needs a cyclotomic scalar");
    return std::get<2>(value_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (r.value_.index()) {
        case 0: std::get<0>(r.value_) = -std::get<0>(r.value_); break;
        case 1: {
            auto& v = std::get<1>(r.value_);
            v = v == 0 ? 0 : field_.data_->p - v;
            break;
        }
        default:
            for (auto& c : std::get<2>(r.value_)) c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    switch (value_.index()) {
        case 0: std::get<0>(value_) += std::get<0>(o.value_); break;
        case 1: {
            auto& v = std::get<1>(value_);
            v = (v + std::get<1>(o.value_)) % field_.data_->p;
            break;
        }
        default: {
            auto& a = std::get<2>(value_);
            const auto& b = std::get<2>(o.value_);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    switch (value_.index()) {
        case 0: std::get<0>(value_) *= std::get<0>(o.value_); break;
        case 1: {
            auto& v = std::get<1>(value_);
            v = v * std::get<1>(o.value_) % field_.data_->p;
            break;
        }
        default: {
            auto prod = poly_mul(std::get<2>(value_), std::get<2>(o.value_));
            reduce_mod(prod, field_.data_->phi);
            std::get<2>(value_) = std::move(prod);
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero in " + field_.name());
    switch (value_.index()) {
        case 0: return Scalar(field_, mpq_class(1) / std::get<0>(value_));
        case 1: {
            const auto p = field_.data_->p;
            return Scalar(field_, powmod(std::get<1>(value_), p - 2, p));
        }
        default: {
            const auto& phi = field_.data_->phi;
            QPoly r0(phi.begin(), phi.end());
            QPoly r1 = std::get<2>(value_);
            trim(r1);
            QPoly s0, s1{mpq_class(1)};
            while (!r1.empty()) {
                auto [q, r] = poly_divmod(r0, r1);
                r0 = std::move(r1);
                r1 = std::move(r);
                QPoly s2 = poly_sub(s0, poly_mul(q, s1));
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            // r0 is a nonzero constant because Phi_m is irreducible.
            const mpq_class lead = r0[0];
            for (auto& c : s0) c /= lead;
            return field_.from_coefficients(std::move(s0));
        }
    }
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = field_.one();
    Scalar base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    Scalar result = field_.one();
    Scalar base = *this;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits; ++b) {
        if (mpz_tstbit(e.get_mpz_t(), b)) result *= base;
        if (b + 1 < bits) base *= base;
    }
    return result;
}

mpq_class Scalar::norm() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_);
        case 1: throw DomainError("norm is only defined in characteristic zero");
        default: {
            const auto& phi = field_.data_->phi;
            const std::size_t d = phi.size() - 1;
            std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d));
            QPoly col = std::get<2>(value_);
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
                col.insert(col.begin(), mpq_class(0));
                reduce_mod(col, phi);
            }
            return rational_determinant(std::move(m));
        }
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_.descriptor() == b.field_.descriptor() && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.field_.descriptor() <=> b.field_.descriptor(); c != 0) return c;
    auto cmp_q = [](const mpq_class& x, const mpq_class& y) {
        int c = cmp(x, y);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    };
    switch (a.value_.index()) {
        case 0: return cmp_q(std::get<0>(a.value_), std::get<0>(b.value_));
        case 1: return std::get<1>(a.value_) <=> std::get<1>(b.value_);
        default: {
            const auto& x = std::get<2>(a.value_);
            const auto& y = std::get<2>(b.value_);
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (auto c = cmp_q(x[i], y[i]); c != 0) return c;
            }
            return std::strong_ordering::equal;
        }
    }
}

std::string Scalar::to_string() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_).get_str();
        case 1: return std::to_string(std::get<1>(value_));
        default: {
            const auto& c = std::get<2>(value_);
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                const bool neg = c[i] < 0;
                const mpq_class mag = abs(c[i]);
                if (first) {
                    if (neg) os << '-';
                } else {
                    os << (neg ? " - " : " + ");
                }
                first = false;
                if (i == 0) {
                    os << mag.get_str();
                    continue;
                }
                if (mag != 1) os << mag.get_str() << '*';
                os << 'z';
                if (i > 1) os << '^' << i;
            }
            return first ? "0" : os.str();
        }
    }
}

}  // namespace evoalg
