#include "admg/joint_table.hpp"

#include <cmath>
#include <string>

#include "admg/errors.hpp"

namespace admg {

JointTable::JointTable(int n, std::vector<double> p) : n_(n), p_(std::move(p)) {
    if (p_.size() != (std::size_t{1} << n)) {
        throw DimensionMismatch("joint table over " + std::to_string(n) + " variables needs " +
                                std::to_string(std::size_t{1} << n) + " entries, got " +
                                std::to_string(p_.size()));
    }
}

double JointTable::sum() const {
    double s = 0.0;
    for (double v : p_) s += v;
    return s;
}

bool JointTable::is_normalized(double tol) const {
    if (std::abs(sum() - 1.0) > tol) return false;
    for (double v : p_) {
        if (v < -tol) return false;
    }
    return true;
}

JointTable JointTable::uniform(int n) {
    JointTable t(n);
    double v = 1.0 / static_cast<double>(std::uint64_t{1} << n);
    for (std::uint32_t a = 0; a < t.assignment_count(); ++a) t[a] = v;
    return t;
}

std::uint32_t JointTable::pack(std::uint32_t aligned, VertexSet s) {
    std::uint32_t packed = 0;
    int j = 0;
    for (int v : s) {
        packed |= ((aligned >> v) & 1u) << j;
        ++j;
    }
    return packed;
}

std::vector<double> JointTable::marginal(VertexSet s) const {
    std::vector<double> out(std::size_t{1} << s.size(), 0.0);
    for (std::uint32_t a = 0; a < assignment_count(); ++a) out[pack(a, s)] += p_[a];
    return out;
}

double JointTable::marginal_prob(VertexSet s, std::uint32_t aligned) const {
    double out = 0.0;
    std::uint32_t fixed = aligned & s.bits();
    // Sum over assignments agreeing with `aligned` on s.
    VertexSet rest = VertexSet(~s.bits()) & VertexSet::full(n_);
    for_each_subset(rest, [&](VertexSet free) { out += p_[fixed | free.bits()]; });
    return out;
}

bool ci_holds(const JointTable& table, VertexSet x, VertexSet y, VertexSet z, double tol) {
    if (x.empty() || y.empty()) return true;
    VertexSet xyz = x | y | z;
    std::vector<double> pxyz = table.marginal(xyz);
    // Indices into the packed xyz assignment for each of the three groups.
    std::vector<double> pz(std::size_t{1} << z.size(), 0.0);
    std::vector<double> pxz(std::size_t{1} << (x.size() + z.size()), 0.0);
    std::vector<double> pyz(std::size_t{1} << (y.size() + z.size()), 0.0);

    // Recover aligned bits from packed xyz assignments to regroup them.
    std::vector<int> members = xyz.to_vector();
    auto sweep = [&](auto&& fn) {
        for (std::uint32_t packed = 0; packed < pxyz.size(); ++packed) {
            std::uint32_t aligned = 0;
            for (std::size_t j = 0; j < members.size(); ++j) {
                aligned |= ((packed >> j) & 1u) << members[j];
            }
            fn(packed, aligned);
        }
    };
    sweep([&](std::uint32_t packed, std::uint32_t aligned) {
        pz[JointTable::pack(aligned, z)] += pxyz[packed];
        pxz[JointTable::pack(aligned, x | z)] += pxyz[packed];
        pyz[JointTable::pack(aligned, y | z)] += pxyz[packed];
    });

    bool ok = true;
    sweep([&](std::uint32_t packed, std::uint32_t aligned) {
        if (!ok) return;
        double z_prob = pz[JointTable::pack(aligned, z)];
        if (z_prob <= tol) return;
        double lhs = pxyz[packed] / z_prob;
        double rhs = (pxz[JointTable::pack(aligned, x | z)] / z_prob) *
                     (pyz[JointTable::pack(aligned, y | z)] / z_prob);
        if (std::abs(lhs - rhs) > tol) ok = false;
    });
    return ok;
}

}  // namespace admg
