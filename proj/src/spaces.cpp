#include "orbitlab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace orbitlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::HorizonExceeded: return "HorizonExceeded";
        case ErrorCode::DegeneratePower: return "DegeneratePower";
        case ErrorCode::EmptySubspace: return "EmptySubspace";
        case ErrorCode::NoEligibleIndex: return "NoEligibleIndex";
        case ErrorCode::NormingFailure: return "NormingFailure";
        case ErrorCode::NoGoodDirection: return "NoGoodDirection";
        case ErrorCode::NormsNotMonotone: return "NormsNotMonotone";
        case ErrorCode::EmptyCluster: return "EmptyCluster";
        case ErrorCode::EmptyA: return "EmptyA";
        case ErrorCode::SearchFailure: return "SearchFailure";
        case ErrorCode::PlanInfeasible: return "PlanInfeasible";
        case ErrorCode::StarFails: return "StarFails";
        case ErrorCode::PlanExhausted: return "PlanExhausted";
        case ErrorCode::VerificationFailure: return "VerificationFailure";
        case ErrorCode::NoMatchedPairs: return "NoMatchedPairs";
        case ErrorCode::UnknownConstant: return "UnknownConstant";
        case ErrorCode::ClaimFailed: return "ClaimFailed";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

SpaceSpec SpaceSpec::lp(double p, int dim) {
    if (!(p >= 1.0))
        fail(ErrorCode::InvalidArgument, "lp exponent must satisfy p >= 1");
    if (dim < 1)
        fail(ErrorCode::InvalidArgument, "space dimension must be positive");
    SpaceSpec s;
    s.kind = Kind::Lp;
    s.p = p;
    s.dim = dim;
    return s;
}

SpaceSpec SpaceSpec::sup(int dim) {
    if (dim < 1)
        fail(ErrorCode::InvalidArgument, "space dimension must be positive");
    SpaceSpec s;
    s.kind = Kind::Sup;
    s.p = std::numeric_limits<double>::infinity();
    s.dim = dim;
    return s;
}

double SpaceSpec::dual_exponent() const {
    if (is_sup()) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

std::string SpaceSpec::describe() const {
    std::ostringstream os;
    if (is_sup())
        os << "sup(d=" << dim << ")";
    else
        os << "lp(p=" << p << ", d=" << dim << ")";
    return os.str();
}

Vector::Vector(SpaceSpec s, std::vector<double> c) : space(s), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != space.dim)
        fail(ErrorCode::DimensionMismatch, "vector length does not match space dimension");
}

Vector Vector::zero(const SpaceSpec& s) {
    return Vector(s, std::vector<double>(static_cast<size_t>(s.dim), 0.0));
}

Vector Vector::basis(const SpaceSpec& s, int index) {
    if (index < 0 || index >= s.dim)
        fail(ErrorCode::InvalidArgument, "basis index out of range");
    Vector e = zero(s);
    e[index] = 1.0;
    return e;
}

Functional::Functional(SpaceSpec s, std::vector<double> c) : space(s), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != space.dim)
        fail(ErrorCode::DimensionMismatch, "functional length does not match space dimension");
}

double Functional::operator()(const Vector& x) const {
    check_same_space(space, x.space, "Functional::operator()");
    return dot(coeffs, x.coords);
}

namespace {

double lp_norm(const std::vector<double>& v, double p) {
    if (p == 1.0) {
        double s = 0.0;
        for (double t : v) s += std::fabs(t);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (double t : v) s += t * t;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double t : v) s += std::pow(std::fabs(t), p);
    return std::pow(s, 1.0 / p);
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double t : v) m = std::max(m, std::fabs(t));
    return m;
}

double seq_norm(const std::vector<double>& v, const SpaceSpec& s) {
    return s.is_sup() ? sup_norm(v) : lp_norm(v, s.p);
}

} // namespace

double norm(const Vector& x) { return seq_norm(x.coords, x.space); }

double dual_norm(const Functional& f) {
    const double q = f.space.dual_exponent();
    if (std::isinf(q)) return sup_norm(f.coeffs);
    SpaceSpec dual = SpaceSpec::lp(q, f.space.dim);
    return seq_norm(f.coeffs, dual);
}

Vector normalize(const Vector& x, double zero_tol) {
    const double n = norm(x);
    if (n <= zero_tol)
        fail(ErrorCode::ZeroVector, "cannot normalize a (numerically) zero vector");
    return scale(x, 1.0 / n);
}

Functional duality_functional(const Vector& x, double zero_tol) {
    const double n = norm(x);
    if (n <= zero_tol)
        fail(ErrorCode::ZeroVector, "duality functional of a zero vector");

    const int d = x.dim();
    std::vector<double> c(static_cast<size_t>(d), 0.0);
    if (x.space.is_sup()) {
        // Peak coordinate, lowest attaining index.
        int best = 0;
        double m = -1.0;
        for (int i = 0; i < d; ++i) {
            const double a = std::fabs(x[i]);
            if (a > m) {
                m = a;
                best = i;
            }
        }
        c[static_cast<size_t>(best)] = x[best] >= 0.0 ? 1.0 : -1.0;
    } else if (x.space.p == 1.0) {
        for (int i = 0; i < d; ++i)
            if (x[i] != 0.0) c[static_cast<size_t>(i)] = x[i] > 0.0 ? 1.0 : -1.0;
    } else {
        const double p = x.space.p;
        for (int i = 0; i < d; ++i) {
            if (x[i] == 0.0) continue;
            const double s = x[i] > 0.0 ? 1.0 : -1.0;
            c[static_cast<size_t>(i)] = s * std::pow(std::fabs(x[i]) / n, p - 1.0);
        }
    }
    return Functional(x.space, std::move(c));
}

Vector random_unit(const SpaceSpec& space, std::uint64_t seed) {
    Rng rng(seed);
    return random_unit(space, rng);
}

Vector random_unit(const SpaceSpec& space, Rng& rng) {
    Vector x = Vector::zero(space);
    double n = 0.0;
    do {
        for (int i = 0; i < space.dim; ++i) x[i] = rng.normal();
        n = norm(x);
    } while (n <= kZeroVectorTolerance);
    return scale(x, 1.0 / n);
}

Vector add(const Vector& x, const Vector& y) {
    check_same_space(x.space, y.space, "add");
    Vector z = x;
    for (int i = 0; i < z.dim(); ++i) z[i] += y[i];
    return z;
}

Vector sub(const Vector& x, const Vector& y) {
    check_same_space(x.space, y.space, "sub");
    Vector z = x;
    for (int i = 0; i < z.dim(); ++i) z[i] -= y[i];
    return z;
}

Vector scale(const Vector& x, double c) {
    Vector z = x;
    for (double& t : z.coords) t *= c;
    return z;
}

Vector axpy(double a, const Vector& x, const Vector& y) {
    check_same_space(x.space, y.space, "axpy");
    Vector z = y;
    for (int i = 0; i < z.dim(); ++i) z[i] += a * x[i];
    return z;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double distance(const Vector& x, const Vector& y) { return norm(sub(x, y)); }

void check_same_space(const SpaceSpec& a, const SpaceSpec& b, const char* where) {
    if (a != b)
        fail(ErrorCode::DimensionMismatch,
             std::string(where) + ": space mismatch (" + a.describe() + " vs " + b.describe() + ")");
}

} // namespace orbitlab
