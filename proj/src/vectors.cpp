#include "hvec/vectors.hpp"

#include <sstream>

namespace hvec {

namespace {

Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational ratio(const Integer& num, const Integer& den) { return Rational(num, den); }

}  // namespace

FVector f_vector(const SimplicialComplex& complex) {
    FVector f;
    for (int j = -1; j <= complex.dim(); ++j) f.values.emplace_back(complex.count(j));
    return f;
}

HVector h_from_f(const FVector& f) {
    const int d = f.d();
    HVector h;
    h.values.resize(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        Integer sum = 0;
        for (int j = 0; j <= i; ++j) sum += sign_power(i - j) * binomial(d - j, d - i) * f[j - 1];
        h.values[static_cast<std::size_t>(i)] = sum;
    }
    return h;
}

FVector f_from_h(const HVector& h) {
    const int d = h.d();
    FVector f;
    f.values.resize(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) {
        Integer sum = 0;
        for (int i = 0; i <= j; ++i) sum += binomial(d - i, d - j) * h[i];
        f.values[static_cast<std::size_t>(j)] = sum;
    }
    return f;
}

ShortHVector short_h_from_links(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw ComplexError("short h-vector requires a pure complex");
    const int d = complex.dim() + 1;
    ShortHVector out;
    out.values.assign(static_cast<std::size_t>(d), Integer(0));
    for (Vertex v : complex.vertices()) {
        HVector h = h_from_f(f_vector(link(complex, Face{v})));
        // Purity makes every vertex link (d-2)-dimensional.
        for (int i = 0; i < d; ++i) out.values[static_cast<std::size_t>(i)] += h[i];
    }
    return out;
}

ShortHVector short_h_from_f(const FVector& f) {
    const int d = f.d();
    ShortHVector out;
    out.values.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Integer sum = 0;
        for (int j = 0; j <= i; ++j)
            sum += sign_power(i - j) * (j + 1) * binomial(d - 1 - j, d - 1 - i) * f[j];
        out.values[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

FVector f_from_short_h(const ShortHVector& short_h) {
    const int d = short_h.d();
    FVector f;
    f.values.reserve(static_cast<std::size_t>(d + 1));
    f.values.emplace_back(1);
    for (int j = 0; j < d; ++j) {
        Integer sum = 0;
        for (int i = 0; i <= j; ++i) sum += binomial(d - 1 - i, d - 1 - j) * short_h[i];
        if (sum % (j + 1) != 0)
            throw NotRealizableError("f_" + std::to_string(j) + " = " + sum.str() + "/" +
                                     std::to_string(j + 1) + " is not an integer");
        f.values.push_back(sum / (j + 1));
    }
    return f;
}

Rational reconstruction_coeff(int d, int i, int j) {
    return ratio(binomial(d - 1 - i, d - 1 - j), j + 1);
}

Rational beta_integral(int i, int r) {
    if (i < 0 || i >= r)
        throw std::out_of_range("beta_integral: need 0 <= i < r, got i=" + std::to_string(i) +
                                ", r=" + std::to_string(r));
    Rational sum = 0;
    for (int j = i + 1; j <= r; ++j)
        sum += ratio(sign_power(r - j) * binomial(r - i - 1, r - j), j);

    const Rational closed =
        ratio(sign_power(r - i - 1) * factorial(i) * factorial(r - i - 1), factorial(r));
    if (sum != closed)
        throw std::logic_error("beta_integral(" + std::to_string(i) + "," + std::to_string(r) +
                               "): finite sum " + to_string(sum) + " != closed form " +
                               to_string(closed));
    return sum;
}

Rational h_short_coeff(int k, int i, int r) {
    if (i < 0 || i >= r) return 0;
    return Rational(binomial(2 * k + 1 - i, 2 * k + 2 - r)) * beta_integral(i, r);
}

Rational h_via_short_h(const ShortHVector& short_h, int k, int r) {
    const int d = 2 * k + 2;
    if (k < 0 || short_h.d() != d)
        throw std::out_of_range("h_via_short_h: short h-vector of length " +
                                std::to_string(short_h.d()) + " does not match k=" +
                                std::to_string(k));
    if (r < 0 || r > d)
        throw std::out_of_range("h_via_short_h: r=" + std::to_string(r) + " outside 0.." +
                                std::to_string(d));
    Rational h = Rational(sign_power(r) * binomial(d, r));
    for (int i = 0; i < r; ++i) h += Rational(short_h[i]) * h_short_coeff(k, i, r);
    return h;
}

Rational lower_bound_coeff(int d, int i, int l) {
    if (!(0 <= l && l <= i && i <= d - 1))
        throw std::out_of_range("lower_bound_coeff: need 0 <= l <= i <= d-1, got d=" +
                                std::to_string(d) + ", i=" + std::to_string(i) +
                                ", l=" + std::to_string(l));
    Rational c = 0;
    for (int j = l; j <= i; ++j) c += ratio(sign_power(i - j) * binomial(d - 1 - l, d - 1 - j), j + 1);
    return c;
}

std::string format_vector(const std::vector<Integer>& values) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ')';
    return os.str();
}

}  // namespace hvec
