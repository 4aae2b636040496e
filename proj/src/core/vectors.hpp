#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tiling.hpp"

namespace htile {

/// Exact integer-coefficient polynomial, low degree first, trailing zeros
/// trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coefficients);
    static IntPolynomial constant(long long c);
    static IntPolynomial x(); // the monomial X

    const std::vector<long long>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    long long coefficient(int k) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial scaled(long long s) const;
    IntPolynomial pow(int e) const;

    /// X^width * P(1/X) == P(X), with width the formal degree used.
    bool palindromic(int width) const;

    std::string to_string() const; // "[c0, c1, ...]"

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<long long> c_;
};

/// Tile counts of a tiling on a pure n-dimensional target: h by order
/// (length n+2), c by critical index (length n+1), f by face dimension
/// (length n+1).
struct TilingVectors {
    int n = -1;
    std::vector<long long> h;
    std::vector<long long> c;
    std::vector<long long> f;

    long long euler() const;
};

/// Requires a pure-dimensional target. Closed simplices count as critical
/// tiles of index zero and open simplices as critical tiles of index n: the
/// empty face is not part of the tiled poset, so the vertex-minimal interval
/// of such tiles is semi-open.
TilingVectors compute_vectors(const Tiling& t);

/// True iff the tiling uses only basic and critical tiles.
bool is_h_tiling(const Tiling& t);

struct IdentityCheck {
    bool ok = false;
    IntPolynomial lhs; // sum_k h_k X^k (X+1)^(n+1-k)
    IntPolynomial rhs; // X * f(X) + sum_{k<=n-1} c_k X^k
};

/// Exact equality of the two sides of the h/c/f identity (valid for
/// h-tilings on pure targets).
IdentityCheck check_h_identity(const TilingVectors& v);

struct PalindromeCheck {
    bool ok = false;
    IntPolynomial poly; // doubled polynomial, degrees 0..n+1
};

/// Builds twice the manifold polynomial
///   sum h_k X^k + sum_{k=2}^{n+1} c_{n+1-k} (X-1)^k + (chi/2) (1-X)^{n+1}
/// and tests palindromy at formal degree n+1. The doubling keeps the
/// arithmetic integral; even n with odd chi is rejected.
PalindromeCheck check_palindromic(const TilingVectors& v, long long chi);

/// The four weighted h-symmetry sums on a triangulated homology manifold:
///   sum k^p (h_k - h_{n+1-k}),  p = 1..4.
/// Items 1 and 2 vanish. Item 3 equals 6((n-1)c_{n-1} - 2c_{n-2}) and is
/// only checked for n > 2 (the Euler term survives differentiation below
/// that). Item 4 equals 12(n+1)((n-1)c_{n-1} - 2c_{n-2}), plus 36*chi in
/// dimension two where the Euler term again survives.
struct CorollaryChecks {
    std::array<std::optional<bool>, 4> items; // item 3 is nullopt when n <= 2
    bool all_pass() const;
};

CorollaryChecks check_corollary_identities(const TilingVectors& v);

/// Plain-text report block with identity results; palindromic/corollary run
/// only when the caller asserts the target is a homology manifold.
std::string vectors_report(const Tiling& t, bool manifold_flag, bool* all_ok = nullptr);

} // namespace htile
