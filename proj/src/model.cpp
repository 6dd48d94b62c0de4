#include "latip/model.hpp"

#include <stdexcept>

namespace latip {

std::vector<std::string> validate_instance(const BipInstance& inst) {
    std::vector<std::string> out;
    const std::size_t m = inst.A.size();
    if (m == 0) out.push_back("A has no rows");
    const std::size_t n = inst.u.size();
    if (n == 0) out.push_back("u is empty");
    for (std::size_t i = 0; i < m; ++i)
        if (inst.A[i].size() != n)
            out.push_back("dimension mismatch A row " + std::to_string(i));
    if (inst.b.size() != m) out.push_back("dimension mismatch b");
    for (std::size_t j = 0; j < n; ++j)
        if (inst.u[j] < 1)
            out.push_back("u[" + std::to_string(j) + "] not positive");
    return out;
}

std::vector<std::string> validate_instance(const BkpInstance& inst) {
    std::vector<std::string> out;
    const std::size_t n = inst.a.size();
    if (n == 0) out.push_back("a is empty");
    if (inst.u.size() != n) out.push_back("dimension mismatch u");
    for (std::size_t j = 0; j < n; ++j)
        if (inst.a[j] < 1)
            out.push_back("a[" + std::to_string(j) + "] not positive");
    for (std::size_t j = 0; j < inst.u.size(); ++j)
        if (inst.u[j] < 1)
            out.push_back("u[" + std::to_string(j) + "] not positive");
    if (inst.b < 1) out.push_back("b not positive");
    return out;
}

bool verify_bkp(const BkpInstance& inst, const Assignment& x) {
    if (x.size() != inst.size())
        throw std::invalid_argument("verify_bkp: assignment length mismatch");
    Int sum = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < 0 || x[j] > inst.u[j]) return false;
        sum += inst.a[j] * x[j];
    }
    return sum == inst.b;
}

bool verify_bip(const BipInstance& inst, const Assignment& x) {
    if (x.size() != inst.cols())
        throw std::invalid_argument("verify_bip: assignment length mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0 || x[j] > inst.u[j]) return false;
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        Int sum = 0;
        for (std::size_t j = 0; j < x.size(); ++j) sum += inst.A[i][j] * x[j];
        if (sum != inst.b[i]) return false;
    }
    return true;
}

BipInstance as_bip(const BkpInstance& inst) {
    BipInstance out;
    out.A.push_back(inst.a);
    out.b.push_back(inst.b);
    out.u = inst.u;
    return out;
}

}  // namespace latip
