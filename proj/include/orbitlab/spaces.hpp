#pragma once

#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rng.hpp"

namespace orbitlab {

// Norm below which a vector is treated as zero (keeps ratios NaN-free).
inline constexpr double kZeroVectorTolerance = 1e-300;

// Truncated sequence-space descriptor: either an l^p norm (p >= 1) or the
// sup norm, on d coordinates. The sup kind doubles as the c0 truncation; at
// finite dimension the two coincide.
struct SpaceSpec {
    enum class Kind { Lp, Sup };

    Kind kind = Kind::Lp;
    double p = 2.0; // exponent, meaningful for Kind::Lp only
    int dim = 1;

    static SpaceSpec lp(double p, int dim);
    static SpaceSpec sup(int dim);

    bool is_sup() const { return kind == Kind::Sup; }

    // Dual exponent q with 1/p + 1/q = 1; sup pairs with l^1.
    // Returns infinity for p = 1.
    double dual_exponent() const;

    bool operator==(const SpaceSpec& other) const {
        return kind == other.kind && dim == other.dim &&
               (kind == Kind::Sup || p == other.p);
    }
    bool operator!=(const SpaceSpec& other) const { return !(*this == other); }

    std::string describe() const;
};

struct Vector {
    SpaceSpec space;
    std::vector<double> coords;

    Vector() = default;
    Vector(SpaceSpec s, std::vector<double> c);

    static Vector zero(const SpaceSpec& s);
    static Vector basis(const SpaceSpec& s, int index); // e_index, 0-based

    int dim() const { return static_cast<int>(coords.size()); }
    double& operator[](int i) { return coords[static_cast<size_t>(i)]; }
    double operator[](int i) const { return coords[static_cast<size_t>(i)]; }
};

// Continuous linear functional, represented by its coefficient sequence;
// pairing is the coordinate dot product, the norm lives in the dual exponent.
struct Functional {
    SpaceSpec space;
    std::vector<double> coeffs;

    Functional() = default;
    Functional(SpaceSpec s, std::vector<double> c);

    double operator()(const Vector& x) const;
};

double norm(const Vector& x);
double dual_norm(const Functional& f);

// x / norm(x); throws ZeroVector below the underflow tolerance.
Vector normalize(const Vector& x, double zero_tol = kZeroVectorTolerance);

// Norming functional: ||f||* = 1 and f(x) = ||x||. For the sup kind ties are
// broken toward the lowest attaining coordinate.
Functional duality_functional(const Vector& x, double zero_tol = kZeroVectorTolerance);

// Deterministic unit vector (same seed, same bits).
Vector random_unit(const SpaceSpec& space, std::uint64_t seed);
Vector random_unit(const SpaceSpec& space, Rng& rng);

// Elementwise helpers shared across modules.
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Vector& x, double c);
Vector axpy(double a, const Vector& x, const Vector& y); // a*x + y
double dot(const std::vector<double>& a, const std::vector<double>& b);
double distance(const Vector& x, const Vector& y); // norm(x - y)

void check_same_space(const SpaceSpec& a, const SpaceSpec& b, const char* where);

} // namespace orbitlab
