#ifndef EVOALG_SCALARS_HPP
#define EVOALG_SCALARS_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evoalg {

enum class FieldKind { Rationals, PrimeField, Cyclotomic };

/// Names one of the exact fields supported by the library: Q, GF(p) with
/// p < 2^31 prime, or the cyclotomic field Q(zeta_m).
///
/// Descriptors are normalized on construction, so `cyclotomic(1)` and
/// `rationals()` compare equal. Validation of p (primality) happens when a
/// Field is built from the descriptor.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;  // p for PrimeField, m for Cyclotomic, 0 for Q

    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(std::uint64_t p);
    static FieldDescriptor cyclotomic(std::uint64_t m);

    /// Accepts `Q`, `GF(p)` and `Q(zeta_m)`.
    static FieldDescriptor parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
    friend auto operator<=>(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<mpz_class>;

/// Phi_m, obtained by dividing x^m - 1 by Phi_d for every proper divisor d of m.
IntPoly cyclotomic_polynomial(std::uint64_t m);

class Scalar;
struct KthRoots;
struct RootOfUnityGroup;

namespace detail {
struct FieldData;
}

/// Shared, immutable handle to a field backend. Copies are cheap; two handles
/// built from equal descriptors share the same precomputed data (Phi_m,
/// discrete-log tables, root-of-unity generator).
class Field {
public:
    Field();  // Q
    explicit Field(const FieldDescriptor& desc);

    const FieldDescriptor& descriptor() const;
    std::string name() const { return descriptor().to_string(); }
    bool is_rationals() const { return descriptor().kind == FieldKind::Rationals; }
    bool is_prime_field() const { return descriptor().kind == FieldKind::PrimeField; }
    bool is_cyclotomic() const { return descriptor().kind == FieldKind::Cyclotomic; }

    /// Degree over the prime field: 1 for Q and GF(p), deg(Phi_m) for Q(zeta_m).
    std::size_t degree() const;
    std::uint64_t characteristic() const;
    /// Phi_m for cyclotomic fields; empty otherwise.
    const IntPoly& cyclotomic_modulus() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Residue class of v in GF(p). Throws DomainError on other fields.
    Scalar from_residue(std::uint64_t v) const;
    /// Element of Q(zeta_m) from coefficients on 1, z, z^2, ...; the vector is
    /// reduced modulo Phi_m, so any length is accepted.
    Scalar from_coefficients(std::vector<mpq_class> coeffs) const;
    /// The generator zeta_m of a cyclotomic field.
    Scalar zeta() const;
    /// Parses the scalar string format (`-3/4`, `5`, `1/2 + 3*z^2`).
    Scalar parse_scalar(std::string_view text) const;

    RootOfUnityGroup root_of_unity_group() const;
    /// Every x in the field with x^k = 1, listed as successive powers of a
    /// generator of the k-torsion (so the list starts with 1).
    std::vector<Scalar> roots_of_unity(std::uint64_t k) const;
    /// Multiplicative order of x when x is a root of unity, nullopt otherwise.
    std::optional<std::uint64_t> mult_order(const Scalar& x) const;
    /// All solutions of x^k = c in this field, or an undecided outcome.
    KthRoots kth_roots(const Scalar& c, std::uint64_t k) const;
    /// Exponent e with generator^e == u for a root of unity u.
    std::optional<std::uint64_t> root_of_unity_log(const Scalar& u) const;

    /// Every nonzero element of GF(p) in residue order. Throws on other fields.
    std::vector<Scalar> nonzero_elements() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.descriptor() == b.descriptor();
    }

private:
    std::shared_ptr<const detail::FieldData> data_;
    friend class Scalar;
};

/// Exact field element in canonical form: reduced fraction (Q), residue
/// (GF(p)), or rational coefficient vector of length deg(Phi_m) (Q(zeta_m)).
/// Equal values always have equal representations.
class Scalar {
public:
    Scalar();  // 0 in Q

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in the prime field embedded in Q (always
    /// false for GF(p), where the question does not arise).
    bool is_rational() const;
    std::optional<mpq_class> as_rational() const;
    std::uint64_t residue() const;
    const std::vector<mpq_class>& coefficients() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;
    Scalar pow(const mpz_class& e) const;
    /// Field norm down to Q; only defined in characteristic zero.
    mpq_class norm() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used for deterministic output: field first, then the
    /// canonical representation (rational value, residue, or coefficient
    /// vector compared lexicographically from the constant term).
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    using Value = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>>;
    Scalar(Field f, Value v) : field_(std::move(f)), value_(std::move(v)) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    Value value_;
    friend class Field;
};

struct RootOfUnityGroup {
    std::uint64_t order = 0;  // N: 2 for Q, p-1 for GF(p), m or 2m for Q(zeta_m)
    Scalar generator;
};

/// Outcome of x^k = c. When `decided` is false the field backend could not
/// settle the equation and `equation` carries it in text form.
struct KthRoots {
    bool decided = true;
    std::vector<Scalar> roots;
    std::string equation;
};

}  // namespace evoalg

#endif  // EVOALG_SCALARS_HPP
