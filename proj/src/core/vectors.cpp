#include "vectors.hpp"

#include <algorithm>

#include "error.hpp"
#include "shelling.hpp"

namespace htile {

IntPolynomial::IntPolynomial(std::vector<long long> coefficients) : c_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::constant(long long c) { return IntPolynomial({c}); }
IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<long long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + o.scaled(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return IntPolynomial();
    std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(long long s) const {
    std::vector<long long> out = c_;
    for (long long& v : out) v *= s;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
    IntPolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool IntPolynomial::palindromic(int width) const {
    if (degree() > width) return false;
    for (int k = 0; k <= width; ++k)
        if (coefficient(k) != coefficient(width - k)) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    std::string s = "[";
    if (c_.empty()) s += "0";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

long long TilingVectors::euler() const {
    long long chi = 0;
    int sign = 1;
    for (long long fj : f) {
        chi += sign * fj;
        sign = -sign;
    }
    return chi;
}

TilingVectors compute_vectors(const Tiling& t) {
    const int n = t.target.dim();
    for (const Simplex& f : t.target.ambient().facets())
        if (f.dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "target is not pure-dimensional");
    TilingVectors v;
    v.n = n;
    v.f = t.target.f_vector();
    ShellingStats stats = compute_stats(t, 0);
    v.h = stats.h;
    v.c = stats.c;
    return v;
}

bool is_h_tiling(const Tiling& t) {
    for (const MorseTile& tile : t.tiles) {
        TileKind kind = tile.classify().kind;
        if (kind != TileKind::Basic && kind != TileKind::Critical) return false;
    }
    return true;
}

IdentityCheck check_h_identity(const TilingVectors& v) {
    const int n = v.n;
    IntPolynomial x = IntPolynomial::x();
    IntPolynomial xp1({1, 1});
    IdentityCheck out;
    for (int k = 0; k <= n + 1; ++k)
        out.lhs = out.lhs + x.pow(k).scaled(v.h[static_cast<std::size_t>(k)]) * xp1.pow(n + 1 - k);
    IntPolynomial fpoly(std::vector<long long>(v.f));
    out.rhs = x * fpoly;
    for (int k = 0; k <= n - 1; ++k)
        out.rhs = out.rhs + x.pow(k).scaled(v.c[static_cast<std::size_t>(k)]);
    out.ok = out.lhs == out.rhs;
    return out;
}

PalindromeCheck check_palindromic(const TilingVectors& v, long long chi) {
    const int n = v.n;
    if (n % 2 == 0 && chi % 2 != 0)
        throw Error(ErrorCode::InvalidInput,
                    "odd Euler characteristic in even dimension gives half-integers");
    IntPolynomial x = IntPolynomial::x();
    IntPolynomial xm1({-1, 1});
    IntPolynomial onemx({1, -1});
    PalindromeCheck out;
    IntPolynomial p;
    for (int k = 0; k <= n + 1; ++k)
        p = p + x.pow(k).scaled(2 * v.h[static_cast<std::size_t>(k)]);
    for (int k = 2; k <= n + 1; ++k)
        p = p + xm1.pow(k).scaled(2 * v.c[static_cast<std::size_t>(n + 1 - k)]);
    p = p + onemx.pow(n + 1).scaled(chi);
    out.poly = p;
    out.ok = p.palindromic(n + 1);
    return out;
}

bool CorollaryChecks::all_pass() const {
    for (const auto& item : items)
        if (item && !*item) return false;
    return true;
}

namespace {

IntPolynomial theta(const IntPolynomial& p) { // X d/dX
    std::vector<long long> out(p.coefficients().size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<long long>(i) * p.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

long long eval_at_one(const IntPolynomial& p) {
    long long s = 0;
    for (long long c : p.coefficients()) s += c;
    return s;
}

} // namespace

CorollaryChecks check_corollary_identities(const TilingVectors& v) {
    const int n = v.n;
    std::array<long long, 5> sums{}; // sums[p] = sum_k k^p (h_k - h_{n+1-k})
    for (int k = 0; k <= n + 1; ++k) {
        long long diff =
            v.h[static_cast<std::size_t>(k)] - v.h[static_cast<std::size_t>(n + 1 - k)];
        long long kp = 1;
        for (int p = 1; p <= 4; ++p) {
            kp *= k;
            sums[static_cast<std::size_t>(p)] += kp * diff;
        }
    }
    // The h-asymmetry polynomial of a manifold tiling equals
    //   sum_{k=2}^{n+1} c_{n+1-k} (1-X)^k (X^{n+1-k} - (-1)^k)
    //   - [n even] chi (1-X)^{n+1},
    // so the weighted sums are its iterated X d/dX values at 1. For n >= 3
    // they reduce to the closed forms 0, 0, 6((n-1)c_{n-1} - 2c_{n-2}) and
    // 12(n+1)((n-1)c_{n-1} - 2c_{n-2}); at n <= 2 the Euler term still
    // reaches the low derivatives and stays in play.
    IntPolynomial onemx({1, -1});
    IntPolynomial rhs;
    for (int k = 2; k <= n + 1; ++k) {
        long long ck = v.c[static_cast<std::size_t>(n + 1 - k)];
        IntPolynomial factor = IntPolynomial::x().pow(n + 1 - k);
        factor = factor - IntPolynomial::constant(k % 2 == 0 ? 1 : -1);
        rhs = rhs + (onemx.pow(k) * factor).scaled(ck);
    }
    if (n % 2 == 0) rhs = rhs - onemx.pow(n + 1).scaled(v.euler());

    std::array<long long, 5> rhs_sums{};
    IntPolynomial cur = rhs;
    for (int p = 1; p <= 4; ++p) {
        cur = theta(cur);
        rhs_sums[static_cast<std::size_t>(p)] = eval_at_one(cur);
    }

    CorollaryChecks out;
    out.items[0] = sums[1] == rhs_sums[1];
    out.items[1] = sums[2] == rhs_sums[2];
    if (n > 2) out.items[2] = sums[3] == rhs_sums[3];
    out.items[3] = sums[4] == rhs_sums[4];
    return out;
}

std::string vectors_report(const Tiling& t, bool manifold_flag, bool* all_ok) {
    auto vec = [](const std::vector<long long>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    TilingVectors v = compute_vectors(t);
    std::string s;
    s += "h = " + vec(v.h) + "\n";
    s += "c = " + vec(v.c) + "\n";
    s += "f = " + vec(v.f) + "\n";
    bool ok = true;
    if (is_h_tiling(t)) {
        IdentityCheck id = check_h_identity(v);
        ok = ok && id.ok;
        s += std::string("identity_h = ") + (id.ok ? "pass" : "fail") + "\n";
        s += "identity_lhs = " + id.lhs.to_string() + "\n";
        s += "identity_rhs = " + id.rhs.to_string() + "\n";
    } else {
        // The order/face-count identity is specific to h-tilings; Morse
        // tilings are audited through the Euler identity below.
        s += "identity_h = n/a\n";
    }
    long long chi = v.euler();
    long long alt = 0;
    int sign = 1;
    for (long long ck : v.c) {
        alt += sign * ck;
        sign = -sign;
    }
    ok = ok && alt == chi;
    s += std::string("identity_euler = ") + (alt == chi ? "pass" : "fail") + "\n";
    if (manifold_flag && is_h_tiling(t)) {
        PalindromeCheck pc = check_palindromic(v, chi);
        ok = ok && pc.ok;
        s += std::string("palindromic = ") + (pc.ok ? "pass" : "fail") + "\n";
        s += "palindromic_poly = " + pc.poly.to_string() + "\n";
        CorollaryChecks cc = check_corollary_identities(v);
        ok = ok && cc.all_pass();
        s += "corollary = [";
        for (std::size_t i = 0; i < cc.items.size(); ++i) {
            if (i) s += ", ";
            s += !cc.items[i] ? "n/a" : (*cc.items[i] ? "pass" : "fail");
        }
        s += "]\n";
    } else {
        s += "palindromic = n/a\n";
        s += "corollary = n/a\n";
    }
    if (all_ok) *all_ok = ok;
    return s;
}

} // namespace htile
