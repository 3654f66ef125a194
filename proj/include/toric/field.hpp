#ifndef TORIC_FIELD_HPP
#define TORIC_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Coefficient field for homology: the rationals, or GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string describe() const;

private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 means rationals
};

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;

    std::int64_t& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

// Exact rank over the chosen field.  Rational rank uses fraction-free
// Bareiss elimination, promoting to arbitrary precision if entries grow
// past 64 bits; GF(p) rank uses modular Gaussian elimination.
int matrix_rank(const IntMatrix& m, const FieldSpec& field);

} // namespace toric

#endif
