#pragma once

// Double-double ("compensated") arithmetic: a value is hi + lo with
// |lo| <= ulp(hi)/2, giving about 106 bits of significand.

#include <cmath>
#include <complex>

namespace fqd::dd {

struct Real {
    double hi = 0.0;
    double lo = 0.0;
};

inline Real two_sum(double a, double b) noexcept
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline Real quick_two_sum(double a, double b) noexcept
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline Real two_prod(double a, double b) noexcept
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Real operator+(Real a, Real b) noexcept
{
    Real s = two_sum(a.hi, b.hi);
    const Real t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) noexcept { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) noexcept { return a + (-b); }

inline Real operator*(Real a, double b) noexcept
{
    Real p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline Real operator*(Real a, Real b) noexcept
{
    Real p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline double to_double(Real a) noexcept { return a.hi + a.lo; }

struct Complex {
    Real re;
    Real im;
};

inline Complex operator+(const Complex& a, const Complex& b) noexcept
{
    return {a.re + b.re, a.im + b.im};
}

inline Complex operator*(const Complex& a, std::complex<double> b) noexcept
{
    return {a.re * b.real() - a.im * b.imag(), a.re * b.imag() + a.im * b.real()};
}

inline Complex operator*(const Complex& a, Real b) noexcept
{
    return {a.re * b, a.im * b};
}

inline std::complex<double> to_complex(const Complex& a) noexcept
{
    return {to_double(a.re), to_double(a.im)};
}

}  // namespace fqd::dd
