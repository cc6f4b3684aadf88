#pragma once
// Neumaier-compensated accumulators. The mean and series passes add up to
// 10^7-ish terms of magnitude ~1, so a plain double sum would lose digits the
// identity checks need. Summation order is part of each caller's contract;
// these structs just keep the rounding error near one ulp of the total.

#include <cmath>
#include <complex>

namespace horomean {

struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    // Folds another compensated partial in, keeping both carry terms.
    void merge(const NeumaierSum& o) {
        add(o.s);
        add(o.c);
    }

    double value() const { return s + c; }
};

struct ComplexSum {
    NeumaierSum re, im;

    void add(const std::complex<double>& z) {
        re.add(z.real());
        im.add(z.imag());
    }

    void merge(const ComplexSum& o) {
        re.merge(o.re);
        im.merge(o.im);
    }

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

} // namespace horomean
