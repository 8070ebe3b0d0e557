#include "hyperinv/shape.hpp"

#include <numeric>
#include <sstream>

namespace hyperinv {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw UsageError("shape needs at least one dimension");
    for (int n : dims_) {
        if (n < 1) throw UsageError("shape dimensions must be positive");
    }
    strides_.assign(dims_.size(), 1);
    for (int l = static_cast<int>(dims_.size()) - 2; l >= 0; --l) {
        strides_[l] = strides_[l + 1] * dims_[l + 1];
    }
    total_cells_ = strides_[0] * dims_[0];
    lcm_degree_ = 1;
    for (int n : dims_) lcm_degree_ = std::lcm(lcm_degree_, static_cast<long>(n));
}

Shape Shape::parse(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            int n = std::stoi(part, &pos);
            if (pos != part.size()) throw UsageError("bad shape: '" + text + "'");
            dims.push_back(n);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad shape: '" + text + "'");
        }
    }
    if (dims.empty()) throw UsageError("bad shape: '" + text + "'");
    return Shape(dims);
}

std::vector<int> Shape::coords_of(long rank) const {
    if (rank < 0 || rank >= total_cells_) throw UsageError("cell rank out of range");
    std::vector<int> coords(dims_.size());
    for (size_t l = 0; l < dims_.size(); ++l) {
        coords[l] = static_cast<int>(rank / strides_[l]);
        rank %= strides_[l];
    }
    return coords;
}

long Shape::rank_of(const std::vector<int>& coords0) const {
    if (coords0.size() != dims_.size()) throw UsageError("coordinate count does not match shape");
    long rank = 0;
    for (size_t l = 0; l < dims_.size(); ++l) {
        if (coords0[l] < 0 || coords0[l] >= dims_[l]) throw UsageError("coordinate out of range");
        rank += coords0[l] * strides_[l];
    }
    return rank;
}

std::string Shape::to_string() const {
    std::string out;
    for (size_t l = 0; l < dims_.size(); ++l) {
        if (l) out += ',';
        out += std::to_string(dims_[l]);
    }
    return out;
}

}  // namespace hyperinv
