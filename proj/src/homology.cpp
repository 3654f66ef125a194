#include "toric/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "toric/errors.hpp"

namespace toric {

long long HomologyDims::total() const {
    return std::accumulate(dims.begin(), dims.end(), 0LL);
}

namespace {

// Boundary matrix from dimension d faces to dimension d-1 faces, with the
// usual alternating signs over ascending vertex order.
IntMatrix boundary_matrix(const std::vector<Face>& lower,
                          const std::vector<Face>& upper) {
    IntMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.cols = static_cast<int>(upper.size());
    m.data.assign(static_cast<size_t>(m.rows) * m.cols, 0);
    for (int c = 0; c < m.cols; ++c) {
        std::vector<int> verts = face_vertices(upper[c]);
        int sign = 1;
        for (int pos = 0; pos < static_cast<int>(verts.size()); ++pos) {
            Face sub = upper[c] & ~(Face(1) << verts[pos]);
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            m.at(static_cast<int>(it - lower.begin()), c) = sign;
            sign = -sign;
        }
    }
    return m;
}

} // namespace

HomologyDims reduced_homology_dims(const SimplicialComplex& c,
                                   const FieldSpec& field,
                                   std::int64_t face_cap) {
    HomologyDims out;
    if (c.is_void()) return out;
    out.max_dim = c.dim();
    out.dims.assign(out.max_dim + 2, 0);

    // Two consecutive face lists at a time: H~_d = |F_d| - rank d_d - rank d_{d+1}.
    std::vector<Face> lower = faces_of_dim(c, -1);  // the empty face
    int prev_rank = 0;                              // rank of boundary into dim d-2
    for (int d = -1; d <= out.max_dim; ++d) {
        std::vector<Face> upper = faces_of_dim(c, d + 1);
        if (static_cast<std::int64_t>(upper.size()) > face_cap)
            throw capability_error("reduced_homology_dims: face count above cap");
        int up_rank = 0;
        if (!upper.empty() && !lower.empty())
            up_rank = matrix_rank(boundary_matrix(lower, upper), field);
        out.dims[d + 1] =
            static_cast<long long>(lower.size()) - prev_rank - up_rank;
        prev_rank = up_rank;
        lower = std::move(upper);
    }
    return out;
}

void BettiTable::add(int i, int j, long long value) {
    if (value < 0) throw argument_error("BettiTable: negative count");
    if (value == 0) return;
    entries_[{i, j}] += value;
}

long long BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
    if (entries_.empty())
        throw argument_error("BettiTable::regularity: empty table (zero ideal)");
    int reg = 0;
    bool first = true;
    for (const auto& [key, value] : entries_) {
        int r = key.second - key.first;
        if (first || r > reg) reg = r;
        first = false;
    }
    return reg;
}

std::string BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, value] : entries_)
        arr.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    nlohmann::json out{{"schema", 1}, {"entries", arr}};
    if (truncated_at >= 0) out["truncated_at"] = truncated_at;
    return out.dump();
}

std::string BettiTable::to_text() const {
    if (entries_.empty()) return "(empty table)\n";
    int max_i = 0, min_row = 1 << 30, max_row = 0;
    for (const auto& [key, value] : entries_) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::vector<size_t> width(max_i + 1, 1);
    for (const auto& [key, value] : entries_)
        width[key.first] =
            std::max(width[key.first], std::to_string(value).size());

    std::ostringstream os;
    size_t rowlab = std::to_string(max_row).size();
    os << std::string(rowlab + 1, ' ');
    for (int i = 0; i <= max_i; ++i) {
        std::string head = std::to_string(i);
        width[i] = std::max(width[i], head.size());
        os << ' ' << std::string(width[i] - head.size(), ' ') << head;
    }
    os << '\n' << std::string(rowlab + 1, ' ')
       << std::string(std::accumulate(width.begin(), width.end(), size_t(0)) +
                          width.size(),
                      '-')
       << '\n';
    for (int row = min_row; row <= max_row; ++row) {
        std::string lab = std::to_string(row);
        os << std::string(rowlab - lab.size(), ' ') << lab << ':';
        for (int i = 0; i <= max_i; ++i) {
            long long v = get(i, row + i);
            std::string cell = v == 0 ? "-" : std::to_string(v);
            os << ' ' << std::string(width[i] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    if (truncated_at >= 0) os << "(truncated at j = " << truncated_at << ")\n";
    return os.str();
}

BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field,
                          int ground_cap) {
    if (c.is_void())
        throw argument_error("hochster_betti: void complex");
    const int n = c.ground_size();
    if (n > ground_cap)
        throw capability_error("hochster_betti: ground set above cap");
    BettiTable table;
    for (Face w = 1; w < (Face(1) << n); ++w) {
        SimplicialComplex rest = restrict_complex(c, w);
        if (rest.is_void() || rest.is_cone()) continue;
        HomologyDims h = reduced_homology_dims(rest, field);
        const int j = face_size(w);
        for (int d = -1; d <= h.max_dim; ++d) {
            long long dim = h.dim(d);
            int i = j - d - 2;
            if (dim > 0 && i >= 0) table.add(i, j, dim);
        }
    }
    return table;
}

} // namespace toric
