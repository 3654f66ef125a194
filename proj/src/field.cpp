#include "toric/field.hpp"

#include <gmpxx.h>

#include <cstdlib>

#include "toric/errors.hpp"

namespace toric {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Fraction-free Bareiss elimination in int64; returns the rank, or -1 if an
// intermediate value would overflow.
int bareiss_rank_i64(IntMatrix m) {
    const std::int64_t limit = std::int64_t(1) << 62;
    int rank = 0;
    std::int64_t prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        const std::int64_t p = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            const std::int64_t f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) {
                __int128 v = static_cast<__int128>(p) * m.at(r, c) -
                             static_cast<__int128>(f) * m.at(rank, c);
                v /= prev;  // exact by Bareiss
                if (v >= limit || v <= -limit) return -1;
                m.at(r, c) = static_cast<std::int64_t>(v);
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

int bareiss_rank_mpz(const IntMatrix& in) {
    std::vector<mpz_class> m(in.data.begin(), in.data.end());
    auto at = [&](int r, int c) -> mpz_class& {
        return m[static_cast<size_t>(r) * in.cols + c];
    };
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < in.cols && rank < in.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < in.rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < in.cols; ++c) std::swap(at(pivot, c), at(rank, c));
        const mpz_class p = at(rank, col);
        for (int r = rank + 1; r < in.rows; ++r) {
            const mpz_class f = at(r, col);
            for (int c = 0; c < in.cols; ++c) {
                mpz_class v = p * at(r, c) - f * at(rank, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, c) = v;
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    unsigned __int128 acc = 1, b = base % p;
    while (exp) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

int modular_rank(const IntMatrix& in, std::uint64_t p) {
    std::vector<std::uint64_t> m(in.data.size());
    for (size_t i = 0; i < in.data.size(); ++i) {
        std::int64_t v = in.data[i] % static_cast<std::int64_t>(p);
        if (v < 0) v += static_cast<std::int64_t>(p);
        m[i] = static_cast<std::uint64_t>(v);
    }
    auto at = [&](int r, int c) -> std::uint64_t& {
        return m[static_cast<size_t>(r) * in.cols + c];
    };
    int rank = 0;
    for (int col = 0; col < in.cols && rank < in.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < in.rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < in.cols; ++c) std::swap(at(pivot, c), at(rank, c));
        const std::uint64_t inv = mod_pow(at(rank, col), p - 2, p);
        for (int r = rank + 1; r < in.rows; ++r) {
            if (at(r, col) == 0) continue;
            const std::uint64_t f =
                static_cast<std::uint64_t>(static_cast<unsigned __int128>(at(r, col)) * inv % p);
            for (int c = col; c < in.cols; ++c) {
                unsigned __int128 sub = static_cast<unsigned __int128>(f) * at(rank, c) % p;
                at(r, c) = (at(r, c) + p - static_cast<std::uint64_t>(sub)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw argument_error("FieldSpec: characteristic must be prime");
    if (p >= (std::uint64_t(1) << 31))
        throw argument_error("FieldSpec: prime too large");
    return FieldSpec(p);
}

std::string FieldSpec::describe() const {
    return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

int matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (!field.is_rationals()) return modular_rank(m, field.characteristic());
    int r = bareiss_rank_i64(m);
    if (r >= 0) return r;
    return bareiss_rank_mpz(m);
}

} // namespace toric
