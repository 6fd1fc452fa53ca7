#include "strata/complexes.hpp"

#include "strata/errors.hpp"

#include <sstream>

namespace strata {

namespace {

std::string entry_witness(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") = " << to_string(m.at(i, j));
                return os.str();
            }
    return "zero";
}

void throw_first(const ValidationReport& report, const std::string& what) {
    if (report.ok) return;
    const Violation& v = report.violations.front();
    std::ostringstream os;
    os << what << ": " << v.rule << " at degree " << v.degree << " (" << v.detail << ")";
    throw ShapeError(os.str());
}

} // namespace

ValidationReport ComplexStructure::validate(const DimVec& dims, const std::vector<Mat>& diffs) {
    ValidationReport report;
    if (dims.empty() || !is_nonnegative(dims)) {
        report.fail("dims", -1, "dims must be a non-empty vector of non-negative integers");
        return report;
    }
    const size_t n = dims.size() - 1;
    if (diffs.size() != n && diffs.size() != n + 1) {
        report.fail("shape", -1, "expected one differential per degree 0..n-1");
        return report;
    }
    for (size_t i = 0; i < diffs.size(); ++i) {
        const long long target = i + 1 <= n ? dims[i + 1] : 0;
        if (diffs[i].rows() != target || diffs[i].cols() != dims[i])
            report.fail("shape", static_cast<int>(i), "d^i must be dims_{i+1} x dims_i");
    }
    if (!report.ok) return report;
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
        Mat square = diffs[i + 1] * diffs[i];
        if (!square.is_zero())
            report.fail("d2-zero", static_cast<int>(i), "d^{i+1} d^i != 0, " + entry_witness(square));
    }
    return report;
}

ComplexStructure::ComplexStructure(DimVec dims, std::vector<Mat> diffs) {
    auto report = validate(dims, diffs);
    throw_first(report, "invalid complex");
    dims_ = std::move(dims);
    diffs_ = std::move(diffs);
    if (diffs_.size() == dims_.size() - 1)
        diffs_.emplace_back(0, static_cast<int>(dims_.back()));
}

DimVec ComplexStructure::rank_vector() const {
    DimVec r(dims_.size(), 0);
    for (size_t i = 0; i < diffs_.size(); ++i) r[i] = rank(diffs_[i]);
    return r;
}

HomologyProfile homology_profile(const ComplexStructure& c) {
    const int n = c.top_degree();
    HomologyProfile p;
    p.z.assign(n + 1, 0);
    p.b.assign(n + 1, 0);
    p.h.assign(n + 1, 0);
    const DimVec r = c.rank_vector();
    for (int i = 0; i <= n; ++i) {
        p.z[i] = c.dim_at(i) - r[i];
        p.b[i] = i > 0 ? r[i - 1] : 0;
        p.h[i] = p.z[i] - p.b[i];
    }
    return p;
}

AdaptedBases adapted_decomposition(const ComplexStructure& c) {
    const int n = c.top_degree();
    AdaptedBases out;
    out.b.resize(n + 1);
    out.h.resize(n + 1);
    out.c.resize(n + 1);
    Mat boundary(static_cast<int>(c.dim_at(0)), 0); // B^0 = 0
    for (int i = 0; i <= n; ++i) {
        out.b[i] = boundary;
        const Mat z = kernel_basis(c.diff(i));
        // Lift of H^i: kernel columns that extend B^i, in pivot order.
        ColumnSpace span(static_cast<int>(c.dim_at(i)));
        for (int j = 0; j < out.b[i].cols(); ++j) span.add(out.b[i].col(j));
        std::vector<int> keep;
        for (int j = 0; j < z.cols(); ++j)
            if (span.add(z.col(j))) keep.push_back(j);
        out.h[i] = z.cols_subset(keep);
        // C^i: complement of Z^i = B^i + H^i by standard vectors.
        out.c[i] = complement_basis(out.b[i].hstack(out.h[i]), static_cast<int>(c.dim_at(i)));
        // d identifies the C^i basis with the B^{i+1} basis column by column.
        boundary = c.diff(i) * out.c[i];
    }
    return out;
}

ValidationReport ChainMap::validate(const ComplexStructure& source,
                                    const ComplexStructure& target,
                                    const std::vector<Mat>& comps) {
    ValidationReport report;
    const int n = source.top_degree();
    if (target.top_degree() != n) {
        report.fail("degrees", -1, "source and target must share the top degree");
        return report;
    }
    if (static_cast<int>(comps.size()) != n + 1) {
        report.fail("shape", -1, "expected one component per degree 0..n");
        return report;
    }
    for (int i = 0; i <= n; ++i)
        if (comps[i].rows() != target.dim_at(i) || comps[i].cols() != source.dim_at(i))
            report.fail("shape", i, "f^i must be dim W^i x dim V^i");
    if (!report.ok) return report;
    for (int i = 0; i < n; ++i) {
        Mat gap = target.diff(i) * comps[i] - comps[i + 1] * source.diff(i);
        if (!gap.is_zero())
            report.fail("commutation", i, "delta^i f^i != f^{i+1} d^i, " + entry_witness(gap));
    }
    return report;
}

ChainMap::ChainMap(ComplexStructure source, ComplexStructure target, std::vector<Mat> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
    auto report = validate(source_, target_, comps_);
    throw_first(report, "invalid chain map");
}

RankProfiles rank_profiles(const ChainMap& f) {
    const int n = f.top_degree();
    RankProfiles out;
    out.rk.assign(n + 1, 0);
    out.hrk.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        out.rk[i] = rank(f.comp(i));
        const Mat zv = kernel_basis(f.source().diff(i));
        const Mat fz = f.comp(i) * zv;
        if (i == 0) {
            out.hrk[i] = rank(fz);
        } else {
            const Mat bw = image_basis(f.target().diff(i - 1));
            out.hrk[i] = rank(fz.hstack(bw)) - bw.cols();
        }
    }
    return out;
}

DimVec fkernel_dims(const ChainMap& f) {
    const int n = f.top_degree();
    DimVec out(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        out[i] = rank(f.comp(i) * kernel_basis(f.source().diff(i)));
    return out;
}

LinearSystem chain_map_system(const ComplexStructure& source, const ComplexStructure& target) {
    if (source.top_degree() != target.top_degree())
        throw ShapeError("chain_map_system: top degrees differ");
    const int n = source.top_degree();
    LinearSystem sys;
    std::vector<int> blocks(n + 1);
    for (int i = 0; i <= n; ++i)
        blocks[i] = sys.add_block(static_cast<int>(target.dim_at(i)), static_cast<int>(source.dim_at(i)));
    for (int i = 0; i < n; ++i) {
        const Mat& dv = source.diff(i);
        const Mat& dw = target.diff(i);
        for (int a = 0; a < static_cast<int>(target.dim_at(i + 1)); ++a)
            for (int b = 0; b < static_cast<int>(source.dim_at(i)); ++b) {
                sys.begin_equation();
                for (int c = 0; c < static_cast<int>(target.dim_at(i)); ++c)
                    sys.add_term(dw.at(a, c), blocks[i], c, b);
                for (int c = 0; c < static_cast<int>(source.dim_at(i + 1)); ++c)
                    sys.add_term(-dv.at(c, b), blocks[i + 1], a, c);
            }
    }
    return sys;
}

long long hom0_dimension_oracle(const ComplexStructure& source, const ComplexStructure& target) {
    return chain_map_system(source, target).solution_dim();
}

std::vector<std::vector<Mat>> hom0_space_basis(const ComplexStructure& source,
                                               const ComplexStructure& target) {
    LinearSystem sys = chain_map_system(source, target);
    const Mat basis = sys.solution_basis();
    const int n = source.top_degree();
    std::vector<std::vector<Mat>> out;
    out.reserve(basis.cols());
    for (int k = 0; k < basis.cols(); ++k) {
        std::vector<Mat> comps;
        comps.reserve(n + 1);
        for (int i = 0; i <= n; ++i) comps.push_back(sys.block_of(basis, k, i));
        out.push_back(std::move(comps));
    }
    return out;
}

long long paper_hom0_dimension(const DimVec& h, const DimVec& rkd,
                               const DimVec& h2, const DimVec& rkd2) {
    const size_t len = std::max(std::max(h.size(), h2.size()), std::max(rkd.size(), rkd2.size()));
    long long total = 0;
    for (size_t i = 0; i < len; ++i) {
        const long long ii = static_cast<long long>(i);
        total += vec_at(h, ii) * vec_at(h2, ii) + vec_at(rkd, ii) * vec_at(rkd2, ii);
    }
    return total;
}

long long split_hom0_dimension(const HomologyProfile& a, const HomologyProfile& b) {
    const size_t len = std::max(a.h.size(), b.h.size());
    long long total = 0;
    for (size_t i = 0; i < len; ++i) {
        const long long ii = static_cast<long long>(i);
        total += (vec_at(a.h, ii) + vec_at(a.b, ii + 1)) * (vec_at(b.h, ii) + vec_at(b.b, ii)) +
                 vec_at(a.b, ii + 1) * vec_at(b.b, ii + 1);
    }
    return total;
}

} // namespace strata
