#include "vdw/position.hpp"

#include "vdw/curve.hpp"
#include "vdw/error.hpp"
#include "vdw/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace vdw {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::string subset_str(std::span<const int> subset) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
    os << "}";
    return os.str();
}

void for_each_subset(int q, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    if (size > q) return;
    while (true) {
        fn(idx);
        int j = size - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == q - size + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < size; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

}  // namespace

Family::Family(std::vector<Hypersurface> members, int N, const Variety& v)
    : members_(std::move(members)), N_(N) {
    if (members_.empty()) throw ValidationError("family: no hypersurfaces");
    if (N_ < v.dim_k())
        throw ValidationError("family: N must be at least the variety dimension");
    long d = 1;
    for (const Hypersurface& h : members_) {
        if (!h.poly.is_homogeneous() || h.poly.is_zero())
            throw ValidationError("family member not a nonzero homogeneous form: " + h.poly.str());
        if (h.poly.degree() != h.degree)
            throw ValidationError("family member degree mismatch: declared " +
                                  std::to_string(h.degree) + " for " + h.poly.str());
        if (h.poly.nvars() != v.ambient_n() + 1)
            throw ValidationError("family member has wrong variable count");
        d = lcm_long(d, h.degree);
    }
    common_degree_ = static_cast<int>(d);
    for (const Hypersurface& h : members_) {
        const unsigned e = static_cast<unsigned>(common_degree_ / h.degree);
        Poly lifted = h.poly.pow(e);
        QuotClass cls = v.quot_class(lifted);
        if (cls.is_zero())
            throw ValidationError("family member lies in the variety ideal: " + h.poly.str());
        lifted_powers_.push_back(std::move(lifted));
        lifted_.push_back(std::move(cls));
    }
}

std::vector<RatVec> Family::lifted_vectors() const {
    std::vector<RatVec> out;
    out.reserve(lifted_.size());
    for (const QuotClass& c : lifted_) out.push_back(c.coords);
    return out;
}

PositionCertificate check_subgeneral(const Family& f, const Variety& v,
                                     const EmptinessOptions& opts) {
    if (f.q() < f.N() + 1)
        throw ValidationError("check_subgeneral: need at least N+1 hypersurfaces");
    const int cap = opts.degree_cap > 0
                        ? opts.degree_cap
                        : f.common_degree() * (f.N() + 1) + static_cast<int>(v.ambient_n()) + 1;

    PositionCertificate cert;
    cert.is_subgeneral = true;
    for_each_subset(f.q(), f.N() + 1, [&](const std::vector<int>& subset) {
        std::vector<Poly> gens = v.generators();
        for (int i : subset) gens.push_back(f.member(static_cast<std::size_t>(i)).poly);
        EmptinessResult r = projective_empty(gens, cap, opts.height_cap);
        if (r.verdict == Emptiness::inconclusive)
            throw InconclusiveError("check_subgeneral: inconclusive emptiness on subset " +
                                    subset_str(subset));
        if (r.verdict == Emptiness::nonempty && cert.is_subgeneral) {
            cert.is_subgeneral = false;
            cert.failing_subset = subset;
        }
        cert.verdicts.push_back({subset, r.verdict, r.witness});
    });
    return cert;
}

int rank_classes(std::span<const int> subset, const Family& f) {
    if (subset.empty()) throw ValidationError("rank_classes: empty subset");
    std::vector<RatVec> rows;
    rows.reserve(subset.size());
    for (int i : subset) rows.push_back(f.lifted_class(static_cast<std::size_t>(i)).coords);
    return static_cast<int>(rank_of_rows(rows));
}

std::vector<RatVec> restrict_to_subspace(const std::vector<RatVec>& vectors,
                                         const std::vector<RatVec>& basis) {
    std::vector<RatVec> out;
    out.reserve(vectors.size());
    for (const RatVec& v : vectors) {
        RatVec w(basis.size(), Rat(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j].size() != v.size())
                throw Error("restrict_to_subspace: dimension mismatch");
            Rat dot(0);
            for (std::size_t t = 0; t < v.size(); ++t) dot += basis[j][t] * v[t];
            w[j] = dot;
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<RatVec> generic_subspace(const Family& f, const Variety& v, int target_dim,
                                     std::uint64_t seed) {
    const std::vector<RatVec> vectors = f.lifted_vectors();
    const std::size_t m = vectors.empty() ? 0 : vectors[0].size();
    if (target_dim <= 0 || static_cast<std::size_t>(target_dim) > m)
        throw ValidationError("generic_subspace: target dimension out of range");
    (void)v;

    Rng rng(seed);
    const int retries = 64;
    for (int attempt = 0; attempt < retries; ++attempt) {
        const long bound = 3 + 2 * attempt;
        std::vector<RatVec> basis(static_cast<std::size_t>(target_dim), RatVec(m, Rat(0)));
        if (static_cast<std::size_t>(target_dim) == m) {
            for (std::size_t i = 0; i < m; ++i) basis[i][i] = 1;
        } else {
            for (auto& row : basis)
                for (auto& entry : row) entry = Rat(static_cast<long>(rng.int_in(-bound, bound)));
        }
        if (rank_of_rows(basis) != static_cast<std::size_t>(target_dim)) continue;

        const std::vector<RatVec> restricted = restrict_to_subspace(vectors, basis);

        bool not_contained = true;
        for (const RatVec& w : restricted) {
            if (std::all_of(w.begin(), w.end(), [](const Rat& c) { return c == 0; })) {
                not_contained = false;
                break;
            }
        }
        if (!not_contained) continue;

        bool ranks_preserved = true;
        const int q = static_cast<int>(vectors.size());
        for (int size = 1; size <= target_dim && ranks_preserved; ++size) {
            for_each_subset(q, size, [&](const std::vector<int>& subset) {
                if (!ranks_preserved) return;
                std::vector<RatVec> orig, rest;
                for (int i : subset) {
                    orig.push_back(vectors[static_cast<std::size_t>(i)]);
                    rest.push_back(restricted[static_cast<std::size_t>(i)]);
                }
                if (rank_of_rows(orig) != rank_of_rows(rest)) ranks_preserved = false;
            });
        }
        if (ranks_preserved) return basis;
    }
    throw ConvergenceError("generic_subspace: retry budget exhausted");
}

std::vector<std::vector<int>> full_rank_subsets(const Family& f, const Variety& v) {
    const int k = v.dim_k();
    std::vector<std::vector<int>> out;
    for_each_subset(f.q(), k + 1, [&](const std::vector<int>& subset) {
        if (rank_classes(subset, f) == k + 1) out.push_back(subset);
    });
    return out;
}

bool completion_spans(const std::vector<std::vector<int>>& subsets, const Family& f,
                      const std::vector<RatVec>& candidate_classes, int full_dim) {
    for (const auto& subset : subsets) {
        std::vector<RatVec> rows;
        for (int i : subset) rows.push_back(f.lifted_class(static_cast<std::size_t>(i)).coords);
        for (const RatVec& t : candidate_classes) rows.push_back(t);
        if (rank_of_rows(rows) != static_cast<std::size_t>(full_dim)) return false;
    }
    return true;
}

std::vector<Poly> complete_basis(std::span<const int> r0, const Family& f, const Variety& v,
                                 std::uint64_t seed) {
    const int k = v.dim_k();
    if (static_cast<int>(r0.size()) != k + 1 || rank_classes(r0, f) != k + 1)
        throw ValidationError("complete_basis: r0 must be a full-rank (k+1)-subset");

    const int d = f.common_degree();
    const auto& std_monos = v.standard_monomials(d);
    const int full_dim = static_cast<int>(std_monos.size());
    const int count = full_dim - k - 1;
    const auto subsets = full_rank_subsets(f, v);

    Rng rng(seed);
    const int retries = 64;
    for (int attempt = 0; attempt < retries; ++attempt) {
        const long bound = 3 + 2 * attempt;
        std::vector<RatVec> classes(static_cast<std::size_t>(count),
                                    RatVec(static_cast<std::size_t>(full_dim), Rat(0)));
        for (auto& row : classes)
            for (auto& entry : row) entry = Rat(static_cast<long>(rng.int_in(-bound, bound)));
        if (!completion_spans(subsets, f, classes, full_dim)) continue;

        std::vector<Poly> forms;
        forms.reserve(classes.size());
        for (const RatVec& c : classes) {
            Poly t(v.ambient_n() + 1);
            for (std::size_t j = 0; j < std_monos.size(); ++j) t.add_term(std_monos[j], c[j]);
            forms.push_back(std::move(t));
        }
        return forms;
    }
    throw ConvergenceError("complete_basis: retry budget exhausted");
}

PositionConstants position_constants(std::span<const int> subset, const Family& f,
                                     std::span<const std::vector<std::complex<double>>> points) {
    if (subset.empty()) throw ValidationError("position_constants: empty subset");
    if (points.empty()) throw ValidationError("position_constants: no sample points");
    const int d = f.common_degree();

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& x : points) {
        double norm2 = 0.0;
        for (const auto& c : x) norm2 += std::norm(c);
        if (norm2 == 0.0) continue;
        const double denom = std::pow(std::sqrt(norm2), d);
        double best = 0.0;
        for (int i : subset) {
            const auto val =
                f.lifted_power(static_cast<std::size_t>(i)).eval(std::span<const std::complex<double>>(x));
            best = std::max(best, std::abs(val));
        }
        const double h = best / denom;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    return {lo, hi};
}

PositionConstants position_constants(std::span<const int> subset, const Family& f,
                                     const RationalCurve& curve, int samples) {
    if (samples <= 0) throw ValidationError("position_constants: sample count must be positive");
    static constexpr double kLogRadii[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
    static constexpr double kGolden = 0.6180339887498949;
    std::vector<std::vector<std::complex<double>>> points;
    points.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double r = std::exp(kLogRadii[static_cast<std::size_t>(j) % std::size(kLogRadii)]);
        const double theta = 2.0 * M_PI * std::fmod(static_cast<double>(j) * kGolden, 1.0);
        points.push_back(curve.eval(std::polar(r, theta)));
    }
    return position_constants(subset, f, points);
}

}  // namespace vdw
