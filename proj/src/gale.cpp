#include "kneser/gale.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "kneser/kernels.hpp"
#include "kneser/setfam.hpp"

namespace kneser {

namespace {

std::uint64_t mask_where(const std::vector<signed char>& signs, signed char want) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == want) m |= std::uint64_t{1} << i;
    return m;
}

std::string signs_to_string(const std::vector<signed char>& signs) {
    std::string s;
    s.reserve(signs.size());
    for (auto x : signs) s.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
    return s;
}

IntVector negated(const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

std::vector<signed char> signs_of(const IntMatrix& points, const IntVector& dir) {
    std::vector<signed char> s(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) s[i] = static_cast<signed char>(sign_of(dot(dir, points[i])));
    return s;
}

// Integer direction attaining `signs` near the boundary ray `row`:
// normal * M + sum_j sigma_j c_j, where c_j vanishes on the other boundary
// points and on the normal, and is positive on boundary point j.
IntVector realize(const IntMatrix& points, const kernels::HyperplaneRow& row, const std::vector<signed char>& boundary_signs,
                  const IntVector& normal) {
    const std::size_t d = normal.size();
    std::vector<std::size_t> support;
    for (std::uint64_t m = row.support; m != 0; m &= m - 1) support.push_back(std::countr_zero(m));

    IntVector w(d, 0);
    for (std::size_t j = 0; j < support.size(); ++j) {
        IntMatrix rows;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (i != j) rows.push_back(points[support[i]]);
        rows.push_back(normal);
        IntVector c = orthogonal_complement(rows);
        if (sign_of(dot(c, points[support[j]])) < 0) c = negated(c);
        for (std::size_t x = 0; x < d; ++x) w[x] += boundary_signs[j] * c[x];
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if ((row.support >> i) & 1u) continue;
        BigInt h = abs(dot(normal, points[i]));
        if (h == 0) throw std::logic_error("boundary meets points outside its spanning subset");
        BigInt pert = abs(dot(w, points[i]));
        BigInt need = pert / h + 1;
        if (need > scale) scale = need;
    }
    IntVector dir(d);
    for (std::size_t x = 0; x < d; ++x) dir[x] = normal[x] * scale + w[x];
    return dir;
}

CellSet sampled_cells(const GaleEmbedding& e) {
    constexpr int kSamples = 20000;
    CellSet out;
    out.coverage = Coverage::Sampled;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<long long> coord(-(1LL << 20), 1LL << 20);
    std::unordered_set<std::string> seen;
    for (int i = 0; i < kSamples; ++i) {
        IntVector dir(e.d);
        for (auto& x : dir) x = coord(rng);
        auto s = signs_of(e.points, dir);
        if (std::find(s.begin(), s.end(), 0) != s.end()) continue;
        if (seen.insert(signs_to_string(s)).second) out.cells.push_back({std::move(s), std::move(dir)});
    }
    return out;
}

void require_general_position(const GaleEmbedding& e) {
    if (!general_position_check(e)) throw std::domain_error("embedding is not in general position");
}

}  // namespace

std::string to_string(Coverage c) { return c == Coverage::Certified ? "certified" : "sampled"; }

GaleEmbedding build_embedding(int n, int s) {
    if (n > kMaxGroundSet) throw CapacityError("n exceeds 64");
    if (s < 1) throw std::domain_error("s = k + l must be at least 1");
    const int d = n - 2 * s + 1;
    if (d < 2) throw std::domain_error("d = n - 2s + 1 must be at least 2 (got " + std::to_string(d) + ")");
    GaleEmbedding e{n, s, d, IntMatrix(n, IntVector(d))};
    for (int i = 1; i <= n; ++i) {
        BigInt v = (i % 2 == 0) ? 1 : -1;
        for (int j = 0; j < d; ++j) {
            e.points[i - 1][j] = v;
            v *= i;
        }
    }
    return e;
}

GaleEmbedding custom_embedding(int s, IntMatrix points) {
    if (points.empty()) throw std::domain_error("embedding needs at least one point");
    if (points.size() > kMaxGroundSet) throw CapacityError("at most 64 points are supported");
    const auto d = static_cast<int>(points.front().size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d) throw std::domain_error("points have inconsistent dimension");
    if (d < 2) throw std::domain_error("dimension must be at least 2");
    return GaleEmbedding{static_cast<int>(points.size()), s, d, std::move(points)};
}

bool general_position_check(const GaleEmbedding& e) { return kernels::parallel::all_minors_nonzero(e.points); }

std::uint64_t HemispherePartition::positive_mask() const { return mask_where(signs, 1); }
std::uint64_t HemispherePartition::negative_mask() const { return mask_where(signs, -1); }
std::uint64_t HemispherePartition::zero_mask() const { return mask_where(signs, 0); }
std::string HemispherePartition::sign_string() const { return signs_to_string(signs); }

HemispherePartition HemispherePartition::flipped() const {
    HemispherePartition f{negated(normal), signs};
    for (auto& x : f.signs) x = static_cast<signed char>(-x);
    return f;
}

std::uint64_t SignVector::positive_mask() const { return mask_where(signs, 1); }
std::uint64_t SignVector::negative_mask() const { return mask_where(signs, -1); }
std::string SignVector::sign_string() const { return signs_to_string(signs); }

std::vector<HemispherePartition> canonical_hemispheres(const GaleEmbedding& e) {
    const auto rows = kernels::parallel::hyperplane_rows(e.points);
    std::vector<HemispherePartition> out;
    out.reserve(2 * rows.size());
    for (const auto& row : rows) {
        if (std::all_of(row.normal.begin(), row.normal.end(), [](const BigInt& x) { return x == 0; }))
            throw std::logic_error("boundary subset is rank deficient");
        HemispherePartition h{row.normal, row.signs};
        if (h.zero_mask() != row.support) throw std::logic_error("boundary meets points outside its spanning subset");
        out.push_back(h);
        out.push_back(h.flipped());
    }
    return out;
}

GaleCheck verify_gale_property(const GaleEmbedding& e) {
    require_general_position(e);
    GaleCheck r;
    for (const auto& h : canonical_hemispheres(e)) {
        ++r.partitions_checked;
        if (max_stable_subset_size(e.n, h.positive_mask()) < e.s) {
            r.ok = false;
            r.counterexample = h;
            return r;
        }
    }
    return r;
}

namespace {

// Walks every boundary ray in both orientations and perturbs it towards each
// assignment of its d-1 boundary points to {+, -} or, for faces, {+, 0, -}.
// A sign of 0 drops that point's correction term, so the point stays on the
// boundary. Cells come out first; with `faces` the lower-dimensional faces
// follow in the same ray order.
CellSet arrangement(const GaleEmbedding& e, bool faces) {
    require_general_position(e);
    if (e.n < e.d) return sampled_cells(e);

    CellSet out;
    std::unordered_set<std::string> seen;
    const auto rows = kernels::parallel::hyperplane_rows(e.points);
    const int zeros = e.d - 1;
    std::uint64_t assignments = 1;
    for (int j = 0; j < zeros; ++j) assignments *= faces ? 3 : 2;

    std::vector<SignVector> lower;
    for (const auto& row : rows) {
        for (int orientation = 0; orientation < 2; ++orientation) {
            const IntVector normal = orientation == 0 ? row.normal : negated(row.normal);
            std::vector<signed char> base = row.signs;
            if (orientation == 1)
                for (auto& x : base) x = static_cast<signed char>(-x);
            for (std::uint64_t assign = 0; assign < assignments; ++assign) {
                std::vector<signed char> boundary(zeros);
                auto signs = base;
                bool strict = true;
                std::uint64_t code = assign;
                int j = 0;
                for (std::uint64_t m = row.support; m != 0; m &= m - 1, ++j) {
                    if (faces) {
                        const auto digit = code % 3;
                        code /= 3;
                        boundary[j] = digit == 0 ? 1 : (digit == 1 ? -1 : 0);
                    } else {
                        boundary[j] = ((assign >> j) & 1u) ? -1 : 1;
                    }
                    strict = strict && boundary[j] != 0;
                    signs[std::countr_zero(m)] = boundary[j];
                }
                if (!seen.insert(signs_to_string(signs)).second) continue;
                IntVector dir = realize(e.points, row, boundary, normal);
                if (signs_of(e.points, dir) != signs) throw std::logic_error("perturbed direction misses its face");
                (strict ? out.cells : lower).push_back({std::move(signs), std::move(dir)});
            }
        }
    }
    for (auto& f : lower) out.cells.push_back(std::move(f));
    return out;
}

}  // namespace

CellSet enumerate_cells(const GaleEmbedding& e) { return arrangement(e, false); }

CellSet enumerate_faces(const GaleEmbedding& e) { return arrangement(e, true); }

WitnessSearch antipodal_witness(const GaleEmbedding& e, int k, std::span<const int> coloring) {
    return antipodal_witness(e, enumerate_faces(e), k, coloring);
}

WitnessSearch antipodal_witness(const GaleEmbedding& e, const CellSet& cells, int k, std::span<const int> coloring) {
    const auto sets = enumerate_stable_ksubsets(e.n, k);
    if (coloring.size() != sets.size())
        throw std::domain_error("coloring must assign a color to each of the " + std::to_string(sets.size()) +
                                " stable k-subsets");
    for (int c : coloring)
        if (c < 0 || c >= e.d) throw std::domain_error("colors must lie in 0..d-1");

    WitnessSearch r;
    r.coverage = cells.coverage;
    std::vector<int> pos(e.d), neg(e.d);
    for (const auto& cell : cells.cells) {
        ++r.cells_examined;
        std::fill(pos.begin(), pos.end(), 0);
        std::fill(neg.begin(), neg.end(), 0);
        const std::uint64_t pm = cell.positive_mask();
        const std::uint64_t nm = cell.negative_mask();
        int sets_pos = 0, sets_neg = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if ((sets[j].mask & ~pm) == 0) {
                ++sets_pos;
                ++pos[coloring[j]];
            } else if ((sets[j].mask & ~nm) == 0) {
                ++sets_neg;
                ++neg[coloring[j]];
            }
        }
        if (sets_pos == 0 || sets_neg == 0) continue;
        const int t_pos = (sets_pos + e.d - 1) / e.d;
        const int t_neg = (sets_neg + e.d - 1) / e.d;
        for (int c = 0; c < e.d; ++c) {
            if (pos[c] >= t_pos && neg[c] >= t_neg) {
                r.witness = Witness{cell, c, pos[c], neg[c], sets_pos, sets_neg, t_pos, t_neg};
                return r;
            }
        }
    }
    return r;
}

}  // namespace kneser
