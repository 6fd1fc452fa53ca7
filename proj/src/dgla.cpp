#include "strata/dgla.hpp"

#include "strata/errors.hpp"
#include "strata/fp.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace strata {

namespace {

std::string idx2(int a, int b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

std::string idx3(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

// [e_a, e_b] as an E0 column
Mat bracket_col(const DGLAStructure& e, int a, int b) {
    Mat out(e.dim0, 1);
    for (int i = 0; i < e.dim0; ++i) out.at(i, 0) = e.bracket[static_cast<size_t>(a)].at(i, b);
    return out;
}

// action of an arbitrary E0 vector on E1 / E2
Mat act_of(const std::vector<Mat>& act, const Mat& a) {
    if (act.empty()) return Mat(0, 0);
    Mat out(act[0].rows(), act[0].cols());
    for (size_t i = 0; i < act.size(); ++i)
        out = out + act[i].scaled(a.at(static_cast<int>(i), 0));
    return out;
}

} // namespace

std::vector<Mat> sl2_bracket_tensor() {
    // basis order (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    std::vector<Mat> br(3, Mat(3, 3));
    br[0].at(2, 1) = 1;  // [e,f] = h
    br[1].at(2, 0) = -1; // [f,e] = -h
    br[2].at(0, 0) = 2;  // [h,e] = 2e
    br[0].at(0, 2) = -2; // [e,h] = -2e
    br[2].at(1, 1) = -2; // [h,f] = -2f
    br[1].at(1, 2) = 2;  // [f,h] = 2f
    return br;
}

DGLAStructure make_sl2_dgla(const RepClass& e1, const RepClass& e2, Mat d0, Mat d1,
                            std::vector<Mat> f2) {
    const ExplicitModule m1 = module_from_class(e1);
    const ExplicitModule m2 = module_from_class(e2);
    DGLAStructure e;
    e.dim0 = 3;
    e.dim1 = m1.dim;
    e.dim2 = m2.dim;
    e.bracket = sl2_bracket_tensor();
    e.act1 = {m1.e, m1.f, m1.h};
    e.act2 = {m2.e, m2.f, m2.h};
    e.e1_class = e1;
    e.e2_class = e2;
    if (d0.rows() == 0 && d0.cols() == 0) d0 = Mat(e.dim1, e.dim0);
    if (d1.rows() == 0 && d1.cols() == 0) d1 = Mat(e.dim2, e.dim1);
    if (f2.empty()) f2.assign(static_cast<size_t>(e.dim2), Mat(e.dim1, e.dim1));
    if (d0.rows() != e.dim1 || d0.cols() != e.dim0) throw ShapeError("d0 must be dim1 x dim0");
    if (d1.rows() != e.dim2 || d1.cols() != e.dim1) throw ShapeError("d1 must be dim2 x dim1");
    if (static_cast<int>(f2.size()) != e.dim2) throw ShapeError("f needs one matrix per E2 coordinate");
    for (const Mat& fk : f2)
        if (fk.rows() != e.dim1 || fk.cols() != e.dim1) throw ShapeError("f components must be dim1 x dim1");
    e.d0 = std::move(d0);
    e.d1 = std::move(d1);
    e.f2 = std::move(f2);
    return e;
}

ValidationReport check_axioms(const DGLAStructure& e) {
    ValidationReport report;

    // bracket antisymmetry
    for (int a = 0; a < e.dim0 && report.ok; ++a)
        for (int b = 0; b < e.dim0; ++b) {
            if ((bracket_col(e, a, b) + bracket_col(e, b, a)).is_zero()) continue;
            report.fail("antisymmetry", -1, "[a,b] + [b,a] != 0 at " + idx2(a, b));
            break;
        }

    // Jacobi on E0
    for (int a = 0; a < e.dim0; ++a)
        for (int b = 0; b < e.dim0; ++b)
            for (int c = 0; c < e.dim0; ++c) {
                Mat lhs(e.dim0, 1), rhs(e.dim0, 1);
                const Mat bc = bracket_col(e, b, c);
                for (int k = 0; k < e.dim0; ++k)
                    lhs = lhs + bracket_col(e, a, k).scaled(bc.at(k, 0));
                const Mat ab = bracket_col(e, a, b);
                for (int k = 0; k < e.dim0; ++k)
                    rhs = rhs + bracket_col(e, k, c).scaled(ab.at(k, 0));
                const Mat ac = bracket_col(e, a, c);
                for (int k = 0; k < e.dim0; ++k)
                    rhs = rhs + bracket_col(e, b, k).scaled(ac.at(k, 0));
                if (!(lhs - rhs).is_zero()) {
                    report.fail("jacobi-e0", -1, "Jacobi fails at " + idx3(a, b, c));
                    goto jacobi_done;
                }
            }
jacobi_done:

    // module axioms on E1 and E2
    for (int which = 0; which < 2; ++which) {
        const auto& act = which == 0 ? e.act1 : e.act2;
        const char* rule = which == 0 ? "action-e1" : "action-e2";
        const int dim = which == 0 ? e.dim1 : e.dim2;
        for (int a = 0; a < e.dim0; ++a)
            for (int b = 0; b < e.dim0; ++b) {
                Mat lhs(dim, dim);
                const Mat ab = bracket_col(e, a, b);
                for (int k = 0; k < e.dim0; ++k) lhs = lhs + act[k].scaled(ab.at(k, 0));
                const Mat rhs = act[a] * act[b] - act[b] * act[a];
                if (!(lhs - rhs).is_zero()) {
                    report.fail(rule, -1, "action is not a Lie homomorphism at " + idx2(a, b));
                    a = e.dim0;
                    break;
                }
            }
    }

    // f symmetric
    for (int k = 0; k < e.dim2; ++k)
        if (!(e.f2[k] - e.f2[k].transposed()).is_zero()) {
            report.fail("f-symmetric", -1, "component " + std::to_string(k));
            break;
        }

    // f equivariance (the Jacobi instance landing in E2):
    // a.f(x,y) = f(a.x, y) + f(x, a.y)
    for (int a = 0; a < e.dim0; ++a) {
        bool bad = false;
        for (int i = 0; i < e.dim1 && !bad; ++i)
            for (int j = 0; j < e.dim1 && !bad; ++j) {
                Mat lhs(e.dim2, 1), rhs(e.dim2, 1);
                for (int k = 0; k < e.dim2; ++k)
                    for (int l = 0; l < e.dim2; ++l)
                        lhs.at(k, 0) += e.act2[a].at(k, l) * e.f2[l].at(i, j);
                for (int k = 0; k < e.dim2; ++k) {
                    Rat acc(0);
                    for (int p = 0; p < e.dim1; ++p)
                        acc += e.act1[a].at(p, i) * e.f2[k].at(p, j) +
                               e.act1[a].at(p, j) * e.f2[k].at(i, p);
                    rhs.at(k, 0) = acc;
                }
                if (!(lhs - rhs).is_zero()) {
                    report.fail("f-equivariance", -1, "fails at generator " + std::to_string(a) + ", pair " + idx2(i, j));
                    bad = true;
                }
            }
        if (bad) break;
    }

    // d0 derivation: d0([a,b]) = -b.d0(a) + a.d0(b)
    for (int a = 0; a < e.dim0; ++a) {
        bool bad = false;
        for (int b = 0; b < e.dim0 && !bad; ++b) {
            const Mat lhs = e.d0 * bracket_col(e, a, b);
            const Mat rhs = e.act1[a] * e.d0.cols_subset({b}) - e.act1[b] * e.d0.cols_subset({a});
            if (!(lhs - rhs).is_zero()) {
                report.fail("d0-derivation", -1, "fails at " + idx2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }

    // d1 Leibniz: d1(a.x) = f(d0 a, x) + a.d1(x)
    for (int a = 0; a < e.dim0; ++a) {
        bool bad = false;
        for (int i = 0; i < e.dim1 && !bad; ++i) {
            Mat x(e.dim1, 1);
            x.at(i, 0) = 1;
            const Mat lhs = e.d1 * (e.act1[a] * x);
            const Mat rhs = f_eval(e, e.d0.cols_subset({a}), x) + e.act2[a] * (e.d1 * x);
            if (!(lhs - rhs).is_zero()) {
                report.fail("d1-leibniz", -1, "fails at generator " + std::to_string(a) + ", coordinate " + std::to_string(i));
                bad = true;
            }
        }
        if (bad) break;
    }

    // d1 d0 = 0
    if (!(e.d1 * e.d0).is_zero()) report.fail("d1d0-zero", -1, "d1 d0 != 0");

    return report;
}

Mat mu_map(const DGLAStructure& e, const Mat& x) {
    Mat out(e.dim1, e.dim0);
    for (int a = 0; a < e.dim0; ++a) {
        const Mat col = e.act1[a] * x;
        for (int i = 0; i < e.dim1; ++i) out.at(i, a) = col.at(i, 0);
    }
    return out;
}

Mat f_contract(const DGLAStructure& e, const Mat& x) {
    Mat out(e.dim2, e.dim1);
    for (int k = 0; k < e.dim2; ++k)
        for (int j = 0; j < e.dim1; ++j) {
            Rat acc(0);
            for (int i = 0; i < e.dim1; ++i) acc += x.at(i, 0) * e.f2[k].at(i, j);
            out.at(k, j) = acc;
        }
    return out;
}

Mat f_eval(const DGLAStructure& e, const Mat& x, const Mat& y) {
    return f_contract(e, x) * y;
}

Mat mc_residual(const DGLAStructure& e, const Mat& x) {
    return (e.d1 * x).scaled(Rat(2)) + f_eval(e, x, x);
}

std::pair<Mat, Mat> twisted_differential(const DGLAStructure& e, const Mat& x) {
    return {e.d0 - mu_map(e, x), e.d1 + f_contract(e, x)};
}

Mat gauge_act(const DGLAStructure& e, const Mat& a, const Mat& x) {
    const Mat action = act_of(e.act1, a);
    // nilpotency check by powering up to the space dimension
    Mat power = Mat::identity(e.dim1);
    for (int k = 0; k < e.dim1; ++k) power = action * power;
    if (!power.is_zero())
        throw ResourceError("gauge series does not terminate: action of a is not nilpotent");

    const Mat da = e.d0 * a;
    Mat total(e.dim1, 1);
    Mat apow_x = x;   // a^k . x
    Mat apow_da = da; // a^k . d0(a)
    Rat factorial(1);
    for (int k = 0;; ++k) {
        if (k > 0) factorial *= Rat(k);
        total = total + apow_x.scaled(Rat(1) / factorial) -
                apow_da.scaled(Rat(1) / (factorial * rat(k + 1)));
        apow_x = action * apow_x;
        apow_da = action * apow_da;
        if (apow_x.is_zero() && apow_da.is_zero()) break;
        if (k > e.dim1 + 1) break; // nilpotency bound
    }
    return total;
}

ValidationReport check_dgla_map(const DGLAMap& phi, const DGLAStructure& src,
                                const DGLAStructure& tgt) {
    ValidationReport report;
    if (phi.phi0.rows() != tgt.dim0 || phi.phi0.cols() != src.dim0 ||
        phi.phi1.rows() != tgt.dim1 || phi.phi1.cols() != src.dim1 ||
        phi.phi2.rows() != tgt.dim2 || phi.phi2.cols() != src.dim2) {
        report.fail("shape", -1, "component shapes do not match the structures");
        return report;
    }

    // phi0 is a Lie algebra map
    for (int a = 0; a < src.dim0; ++a)
        for (int b = 0; b < src.dim0; ++b) {
            const Mat lhs = phi.phi0 * bracket_col(src, a, b);
            Mat rhs(tgt.dim0, 1);
            const Mat pa = phi.phi0.cols_subset({a});
            const Mat pb = phi.phi0.cols_subset({b});
            for (int i = 0; i < tgt.dim0; ++i)
                for (int j = 0; j < tgt.dim0; ++j)
                    rhs = rhs + bracket_col(tgt, i, j).scaled(pa.at(i, 0) * pb.at(j, 0));
            if (!(lhs - rhs).is_zero()) {
                report.fail("phi0-bracket", -1, "fails at " + idx2(a, b));
                a = src.dim0;
                break;
            }
        }

    // actions: phi1(a.x) = phi0(a).phi1(x), same on E2
    for (int which = 0; which < 2; ++which) {
        const auto& sact = which == 0 ? src.act1 : src.act2;
        const auto& tact = which == 0 ? tgt.act1 : tgt.act2;
        const Mat& comp = which == 0 ? phi.phi1 : phi.phi2;
        const char* rule = which == 0 ? "phi1-action" : "phi2-action";
        for (int a = 0; a < src.dim0; ++a) {
            const Mat lhs = comp * sact[a];
            const Mat rhs = act_of(tact, phi.phi0.cols_subset({a})) * comp;
            if (!(lhs - rhs).is_zero()) {
                report.fail(rule, -1, "fails at generator " + std::to_string(a));
                break;
            }
        }
    }

    // differentials
    if (!(phi.phi1 * src.d0 - tgt.d0 * phi.phi0).is_zero())
        report.fail("phi1-d0", -1, "phi1 d0 != d0 phi0");
    if (!(phi.phi2 * src.d1 - tgt.d1 * phi.phi1).is_zero())
        report.fail("phi2-d1", -1, "phi2 d1 != d1 phi1");

    // f tensors: phi2 f(x,y) = f(phi1 x, phi1 y)
    for (int i = 0; i < src.dim1; ++i) {
        bool bad = false;
        for (int j = 0; j < src.dim1 && !bad; ++j) {
            Mat x(src.dim1, 1), y(src.dim1, 1);
            x.at(i, 0) = 1;
            y.at(j, 0) = 1;
            const Mat lhs = phi.phi2 * f_eval(src, x, y);
            const Mat rhs = f_eval(tgt, phi.phi1 * x, phi.phi1 * y);
            if (!(lhs - rhs).is_zero()) {
                report.fail("phi2-f", -1, "fails at pair " + idx2(i, j));
                bad = true;
            }
        }
        if (bad) break;
    }
    return report;
}

Mat push_forward(const DGLAMap& phi, const Mat& x) {
    return phi.phi1 * x;
}

DGLAStructure shift_structure(const DGLAStructure& e, const Mat& x) {
    DGLAStructure out = e;
    out.d0 = e.d0 - mu_map(e, x);
    out.d1 = e.d1 + f_contract(e, x);
    return out;
}

RepClass derivation_g_rank(const ExplicitModule& e1, const Mat& y) {
    Mat gens(e1.dim, 3);
    for (int g = 0; g < 3; ++g) {
        const Mat col = e1.generator(g) * y;
        for (int i = 0; i < e1.dim; ++i) gens.at(i, g) = col.at(i, 0);
    }
    return submodule_generated(e1, gens).second;
}

std::optional<long long> e1_stratum_dim(const RepClass& n, const RepClass& v,
                                        const TypeTable& table) {
    if (!n.effective() || !v.effective())
        throw PreconditionError("effective", "e1_stratum_dim needs effective classes");
    const long long trivial = table.trivial_id();
    if (v.mult_of(trivial) > 0) return std::nullopt; // derivation ranks never touch the trivial type
    for (const auto& [id, s] : v.mult()) {
        if (s > n.mult_of(id))
            throw PreconditionError("v<=n", "rank class exceeds the multiplicities of E1 on type " +
                                                std::to_string(id));
        // the coefficient block is dim(V_id) x n_id, so its rank is also
        // capped by the irreducible dimension
        if (s > table.dim_of(id)) return std::nullopt;
    }
    long long dim = n.mult_of(trivial) * table.dim_of(trivial);
    for (const auto& [id, s] : v.mult())
        dim += (table.dim_of(id) + n.mult_of(id) - s) * s;
    return dim;
}

long long dgla_stratum_dim(const RepClass& e1, const RepClass& e2, const RepClass& v) {
    if (v.is_zero())
        throw PreconditionError("v-nonzero", "the d0 = 0 stratum is dgla0_dim, not a derivation stratum");
    if (e2.mult_of(TypeTable::sl2().trivial_id()) > 0)
        throw PreconditionError("e2-no-trivial",
                                "E2 contains the trivial type; the closed form is unreliable there, "
                                "use the fiber oracle");
    const auto base = e1_stratum_dim(e1, v);
    if (!base) throw PreconditionError("nonempty", "the E1 stratum is empty for this rank class");
    return *base + hom_g_dim(e1 - v, e2) + hom_g_dim(sym_square_sl2(e1), e2);
}

long long dgla0_dim(const RepClass& e1, const RepClass& e2) {
    return hom_g_dim(e1, e2) + hom_g_dim(sym_square_sl2(e1), e2);
}

long long FiberSystem::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major over pairs (i, j) with i <= j
    return static_cast<long long>(i) * dim1 - static_cast<long long>(i) * (i - 1) / 2 + (j - i);
}

std::pair<Mat, std::vector<Mat>> FiberSystem::decode(const Mat& basis, int col) const {
    const long long pairs = static_cast<long long>(dim1) * (dim1 + 1) / 2;
    Mat d1(dim2, dim1);
    for (int k = 0; k < dim2; ++k)
        for (int i = 0; i < dim1; ++i)
            d1.at(k, i) = basis.at(static_cast<int>(static_cast<long long>(k) * dim1 + i), col);
    std::vector<Mat> f2(static_cast<size_t>(dim2), Mat(dim1, dim1));
    const long long off = static_cast<long long>(dim2) * dim1;
    for (int k = 0; k < dim2; ++k)
        for (int i = 0; i < dim1; ++i)
            for (int j = i; j < dim1; ++j) {
                const Rat v = basis.at(static_cast<int>(off + k * pairs + pair_index(i, j)), col);
                f2[static_cast<size_t>(k)].at(i, j) = v;
                f2[static_cast<size_t>(k)].at(j, i) = v;
            }
    return {d1, f2};
}

FiberSystem make_fiber_system(const ExplicitModule& e1, const ExplicitModule& e2, const Mat& y) {
    if (y.rows() != e1.dim || y.cols() != 1) throw ShapeError("y must be an E1 column vector");
    FiberSystem fs;
    fs.dim1 = e1.dim;
    fs.dim2 = e2.dim;
    const int pairs = e1.dim * (e1.dim + 1) / 2;
    fs.d1_block = fs.sys.add_block(e2.dim, e1.dim);
    fs.f_block = fs.sys.add_block(e2.dim, pairs);

    const std::vector<Mat> act1{e1.e, e1.f, e1.h};
    const std::vector<Mat> act2{e2.e, e2.f, e2.h};
    std::vector<Mat> dy; // d0(a) = a.y per generator
    for (int g = 0; g < 3; ++g) dy.push_back(act1[static_cast<size_t>(g)] * y);

    auto f_term = [&](int k, int i, int j) {
        return std::pair<int, int>(k, static_cast<int>(fs.pair_index(i, j)));
    };

    // h first keeps the echelon sparse (weights diagonalize it)
    for (int g : {2, 0, 1}) {
        const Mat& a1 = act1[static_cast<size_t>(g)];
        const Mat& a2 = act2[static_cast<size_t>(g)];
        // f equivariance: a.f(x_i, x_j) - f(a x_i, x_j) - f(x_i, a x_j) = 0
        for (int k = 0; k < e2.dim; ++k)
            for (int i = 0; i < e1.dim; ++i)
                for (int j = i; j < e1.dim; ++j) {
                    fs.sys.begin_equation();
                    for (int l = 0; l < e2.dim; ++l) {
                        auto [rk, rc] = f_term(l, i, j);
                        fs.sys.add_term(a2.at(k, l), fs.f_block, rk, rc);
                    }
                    for (int p = 0; p < e1.dim; ++p) {
                        if (a1.at(p, i) != 0) {
                            auto [rk, rc] = f_term(k, p, j);
                            fs.sys.add_term(-a1.at(p, i), fs.f_block, rk, rc);
                        }
                        if (a1.at(p, j) != 0) {
                            auto [rk, rc] = f_term(k, i, p);
                            fs.sys.add_term(-a1.at(p, j), fs.f_block, rk, rc);
                        }
                    }
                }
        // d1 Leibniz at d0 = mu_y: d1(a x_i) - f(a y, x_i) - a.d1(x_i) = 0
        for (int k = 0; k < e2.dim; ++k)
            for (int i = 0; i < e1.dim; ++i) {
                fs.sys.begin_equation();
                for (int p = 0; p < e1.dim; ++p) {
                    if (a1.at(p, i) != 0) fs.sys.add_term(a1.at(p, i), fs.d1_block, k, p);
                    if (dy[static_cast<size_t>(g)].at(p, 0) != 0) {
                        auto [rk, rc] = f_term(k, p, i);
                        fs.sys.add_term(-dy[static_cast<size_t>(g)].at(p, 0), fs.f_block, rk, rc);
                    }
                }
                for (int l = 0; l < e2.dim; ++l)
                    if (a2.at(k, l) != 0) fs.sys.add_term(-a2.at(k, l), fs.d1_block, l, i);
            }
        // d1 d0 = 0: d1(a y) = 0
        for (int k = 0; k < e2.dim; ++k) {
            fs.sys.begin_equation();
            for (int p = 0; p < e1.dim; ++p)
                if (dy[static_cast<size_t>(g)].at(p, 0) != 0)
                    fs.sys.add_term(dy[static_cast<size_t>(g)].at(p, 0), fs.d1_block, k, p);
        }
    }
    return fs;
}

long long fiber_dim_oracle(const ExplicitModule& e1, const ExplicitModule& e2, const Mat& y) {
    return make_fiber_system(e1, e2, y).sys.solution_dim();
}

Mat e1_rank_witness(const ExplicitModule& m, const RepClass& v) {
    if (!v.effective() || v.mult_of(0) > 0)
        throw PreconditionError("nonempty", "no vector has a derivation rank touching the trivial type");
    Mat y(m.dim, 1);
    for (const auto& [k, s] : v.mult()) {
        if (s > k + 1) throw PreconditionError("nonempty", "rank exceeds the irreducible dimension");
        std::vector<int> offsets;
        for (const ModuleBlock& blk : m.blocks)
            if (blk.k == k) offsets.push_back(blk.offset);
        if (s > static_cast<long long>(offsets.size()))
            throw PreconditionError("v<=n", "rank class exceeds the multiplicities of E1");
        for (long long j = 0; j < s; ++j)
            y.at(offsets[static_cast<size_t>(j)] + static_cast<int>(j), 0) = 1;
    }
    return y;
}

namespace {

// exact-rank matrix counts over GF(q), memoized (guarded: contexts may
// live on different threads)
Int rank_count(int q, int rows, int cols, int target_rank, long long point_cap) {
    static std::mutex cache_mutex;
    static std::map<std::tuple<int, int, int, int>, Int> cache;
    const auto key = std::make_tuple(q, rows, cols, target_rank);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const long long coords = static_cast<long long>(rows) * cols;
    long long points = 1;
    for (long long i = 0; i < coords; ++i) {
        if (points > point_cap / q) throw ResourceError("e1 census cap exceeded");
        points *= q;
    }
    Int count = 0;
    std::vector<int> x(static_cast<size_t>(coords), 0);
    FpMat m(q, rows, cols);
    for (;;) {
        for (long long t = 0; t < coords; ++t) m.e[static_cast<size_t>(t)] = x[static_cast<size_t>(t)];
        if (fp_rank(m) == target_rank) count += 1;
        size_t k = 0;
        while (k < x.size() && x[k] == q - 1) x[k++] = 0;
        if (k == x.size()) break;
        ++x[k];
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, count);
    return count;
}

} // namespace

Int e1_census_count(int q, const RepClass& n, const RepClass& v, long long point_cap) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw PreconditionError("prime-field", "census fields are GF(q) with q in {2,3,5,7}");
    if (v.mult_of(0) > 0) return 0;
    for (const auto& [id, s] : v.mult())
        if (s > n.mult_of(id) || s > id + 1) return 0;
    // trivial coordinates are free; each non-trivial isotypic block is an
    // independent rank condition on its coefficient matrix
    Int count = int_pow(q, n.mult_of(0));
    for (const auto& [id, mult] : n.mult()) {
        if (id == 0) continue;
        const int dim = static_cast<int>(id) + 1;
        const int s = static_cast<int>(v.mult_of(id));
        count *= rank_count(q, dim, static_cast<int>(mult), s, point_cap);
    }
    return count;
}

DimensionFit e1_census_dimension(const RepClass& n, const RepClass& v,
                                 const std::vector<int>& primes, long long point_cap) {
    std::vector<std::pair<int, Int>> counts;
    for (int q : primes) counts.emplace_back(q, e1_census_count(q, n, v, point_cap));
    return dimension_by_census(counts, class_dim(n));
}

} // namespace strata
