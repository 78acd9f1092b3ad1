#include "qwz/determinant.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qwz/errors.hpp"

namespace qwz {

PolyMatrix PolyMatrix::from_coefficients(const std::vector<RationalMatrix>& ascending) {
    if (ascending.empty()) throw std::invalid_argument("polynomial matrix needs at least one coefficient");
    const std::size_t n = ascending.front().rows();
    PolyMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Rational> coeffs;
            coeffs.reserve(ascending.size());
            for (const auto& m : ascending) {
                if (m.rows() != n || m.cols() != n) throw std::invalid_argument("coefficient matrices differ in size");
                coeffs.push_back(m(r, c));
            }
            out(r, c) = RatPolynomial(std::move(coeffs));
        }
    }
    return out;
}

RationalMatrix PolyMatrix::evaluate(const Rational& x) const {
    RationalMatrix out(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out(r, c) = (*this)(r, c).evaluate(x);
    return out;
}

Integer bareiss_det(IntegerMatrix m) {
    const std::size_t n = m.n;
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            // Search the trailing submatrix for any nonzero pivot.
            std::size_t pr = n, pc = n;
            for (std::size_t c = k; c < n && pr == n; ++c) {
                for (std::size_t r = k; r < n; ++r) {
                    if (sgn(m(r, c)) != 0) {
                        pr = r;
                        pc = c;
                        break;
                    }
                }
            }
            if (pr == n) return 0;
            if (pr != k) {
                for (std::size_t c = 0; c < n; ++c) swap(m(k, c), m(pr, c));
                sign = -sign;
            }
            if (pc != k) {
                for (std::size_t r = 0; r < n; ++r) swap(m(r, k), m(r, pc));
                sign = -sign;
            }
        }
        if (k + 1 == n) break;
        mpz_srcptr pivot = m(k, k).get_mpz_t();
        for (std::size_t i = k + 1; i < n; ++i) {
            mpz_srcptr lead = m(i, k).get_mpz_t();
            const bool lead_zero = mpz_sgn(lead) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr aij = m(i, j).get_mpz_t();
                mpz_mul(aij, aij, pivot);
                if (!lead_zero) mpz_submul(aij, lead, m(k, j).get_mpz_t());
                if (prev != 1) mpz_divexact(aij, aij, prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    Integer det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

Rational det_exact(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    IntegerLift lift = lift_rows(m);
    Integer scale = 1;
    for (const auto& s : lift.row_scale) scale *= s;
    Rational out(bareiss_det(std::move(lift.matrix)), scale);
    out.canonicalize();
    return out;
}

RatPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolation needs one value per node");
    const std::size_t count = nodes.size();
    // Newton divided differences, then expand the Newton form.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = count - 1; i >= level; --i) {
            const Rational gap = nodes[i] - nodes[i - level];
            if (sgn(gap) == 0) throw std::invalid_argument("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
        }
    }
    std::vector<Rational> poly;
    for (std::size_t k = count; k-- > 0;) {
        // poly = poly * (x - nodes[k]) + dd[k]
        poly.emplace_back(0);
        for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] = poly[j - 1] - nodes[k] * poly[j];
        poly[0] = -nodes[k] * poly[0];
        poly[0] += dd[k];
    }
    return RatPolynomial(std::move(poly));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

RatPolynomial charpoly_exact(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t s = m.rows();
    // Row r of (cI - M), scaled by row_scale[r], is the integer row
    // c*row_scale[r]*e_r - lifted[r].
    const IntegerLift lift = lift_rows(m);
    Integer scale = 1;
    for (const auto& x : lift.row_scale) scale *= x;

    std::vector<Rational> nodes(s + 1), values(s + 1);
    parallel_for(s + 1, [&](std::size_t point) {
        IntegerMatrix shifted(s);
        for (std::size_t r = 0; r < s; ++r) {
            for (std::size_t c = 0; c < s; ++c) shifted(r, c) = -lift.matrix(r, c);
            shifted(r, r) += lift.row_scale[r] * static_cast<unsigned long>(point);
        }
        nodes[point] = static_cast<unsigned long>(point);
        Rational v(bareiss_det(std::move(shifted)), scale);
        v.canonicalize();
        values[point] = std::move(v);
    });
    return interpolate(nodes, values);
}

RatPolynomial polymat_det(const PolyMatrix& p, std::size_t degree_bound) {
    const std::size_t probes = degree_bound + 2;
    std::vector<Rational> nodes(probes), values(probes);
    parallel_for(probes, [&](std::size_t point) {
        nodes[point] = static_cast<unsigned long>(point);
        values[point] = det_exact(p.evaluate(nodes[point]));
    });
    const Rational check_node = nodes.back();
    const Rational check_value = values.back();
    nodes.pop_back();
    values.pop_back();
    RatPolynomial det = interpolate(nodes, values);
    if (det.evaluate(check_node) != check_value) {
        throw InconsistentBound("degree bound " + std::to_string(degree_bound) +
                                " is too small for this polynomial determinant");
    }
    return det;
}

}  // namespace qwz
