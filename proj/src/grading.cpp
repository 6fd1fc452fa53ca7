#include "strata/grading.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strata {

long long vec_at(const DimVec& t, long long i) {
    if (i < 0 || i >= static_cast<long long>(t.size())) return 0;
    return t[static_cast<size_t>(i)];
}

bool is_nonnegative(const DimVec& t) {
    return std::all_of(t.begin(), t.end(), [](long long x) { return x >= 0; });
}

DimVec vec_sub(const DimVec& a, const DimVec& b) {
    DimVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = vec_at(a, static_cast<long long>(i)) - vec_at(b, static_cast<long long>(i));
    return out;
}

DimVec vec_add(const DimVec& a, const DimVec& b) {
    DimVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = vec_at(a, static_cast<long long>(i)) + vec_at(b, static_cast<long long>(i));
    return out;
}

bool vec_leq(const DimVec& s, const DimVec& r) {
    const size_t len = std::max(s.size(), r.size());
    for (size_t i = 0; i < len; ++i)
        if (vec_at(s, static_cast<long long>(i)) > vec_at(r, static_cast<long long>(i)))
            return false;
    return true;
}

DimVec vec_min(const DimVec& a, const DimVec& b) {
    DimVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = std::min(vec_at(a, static_cast<long long>(i)), vec_at(b, static_cast<long long>(i)));
    return out;
}

long long chi(long long i, const DimVec& t) {
    if (i < 0) return 0;
    long long acc = 0;
    for (long long j = i; j >= 0; --j)
        acc += ((i - j) % 2 == 0 ? 1 : -1) * vec_at(t, j);
    return acc;
}

DimVec chi_vector(const DimVec& t, size_t len) {
    DimVec out(len, 0);
    long long acc = 0;
    for (size_t i = 0; i < len; ++i) {
        acc = vec_at(t, static_cast<long long>(i)) - acc;
        out[i] = acc;
    }
    return out;
}

std::string vec_to_string(const DimVec& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

std::vector<DimVec> box_maximal_elements(const DimVec& box_upper,
                                         const std::function<bool(const DimVec&)>& admissible,
                                         long long enumeration_cap) {
    if (!is_nonnegative(box_upper)) throw ShapeError("box bound must be non-negative");
    long long volume = 1;
    for (long long b : box_upper) {
        if (volume > enumeration_cap / (b + 1) + 1) throw ResourceError("box volume exceeds enumeration cap");
        volume *= b + 1;
        if (volume > enumeration_cap) throw ResourceError("box volume exceeds enumeration cap");
    }

    std::vector<DimVec> admitted;
    DimVec t(box_upper.size(), 0);
    for (;;) {
        if (admissible(t)) admitted.push_back(t);
        // odometer, first coordinate fastest
        size_t k = 0;
        while (k < t.size() && t[k] == box_upper[k]) t[k++] = 0;
        if (k == t.size()) break;
        ++t[k];
    }

    // Keep the maximal points.  Processing by decreasing total sum means any
    // dominator of t has already been accepted when t is examined.
    std::stable_sort(admitted.begin(), admitted.end(), [](const DimVec& a, const DimVec& b) {
        return std::accumulate(a.begin(), a.end(), 0LL) > std::accumulate(b.begin(), b.end(), 0LL);
    });
    std::vector<DimVec> maximal;
    for (const auto& cand : admitted) {
        bool dominated = false;
        for (const auto& m : maximal)
            if (vec_leq(cand, m)) { dominated = true; break; }
        if (!dominated) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

} // namespace strata
