#include "hyperinv/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperinv {

namespace {

std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(part, &pos);
            if (pos != part.size()) throw UsageError("bad integer list: '" + text + "'");
            out.push_back(v);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad integer list: '" + text + "'");
        }
    }
    return out;
}

}  // namespace

WeightVector WeightVector::zero(const Shape& shape) {
    WeightVector w;
    for (int n : shape.dims()) w.components.emplace_back(n - 1, 0);
    return w;
}

WeightVector WeightVector::parse(const std::string& text, const Shape& shape) {
    const int k = shape.ndims();
    std::vector<std::string> groups;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == ';') {
                groups.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        groups.push_back(cur);
    }
    WeightVector w;
    if (text.find(';') != std::string::npos) {
        // One group per direction.
        if (static_cast<int>(groups.size()) != k)
            throw UsageError("weight '" + text + "' does not match shape " + shape.to_string());
        for (int l = 0; l < k; ++l) w.components.push_back(parse_int_list(groups[l]));
    } else if (k == 1) {
        w.components.push_back(parse_int_list(text));
    } else {
        // Scalar-per-direction shorthand, legal when every dimension is 2.
        std::vector<long> ints = parse_int_list(text);
        bool all_two = std::all_of(shape.dims().begin(), shape.dims().end(),
                                   [](int n) { return n == 2; });
        if (!all_two || static_cast<int>(ints.size()) != k)
            throw UsageError("weight '" + text + "' does not match shape " + shape.to_string());
        for (long v : ints) w.components.push_back({v});
    }
    if (!w.matches(shape))
        throw UsageError("weight '" + text + "' does not match shape " + shape.to_string());
    return w;
}

bool WeightVector::is_zero() const {
    for (const auto& comp : components)
        for (long v : comp)
            if (v != 0) return false;
    return true;
}

bool WeightVector::matches(const Shape& shape) const {
    if (static_cast<int>(components.size()) != shape.ndims()) return false;
    for (int l = 0; l < shape.ndims(); ++l)
        if (static_cast<int>(components[l].size()) != shape.dims()[l] - 1) return false;
    return true;
}

std::string WeightVector::to_string() const {
    bool all_scalar = std::all_of(components.begin(), components.end(),
                                  [](const std::vector<long>& c) { return c.size() == 1; });
    std::string out;
    for (size_t l = 0; l < components.size(); ++l) {
        if (l) out += all_scalar ? "," : ";";
        for (size_t i = 0; i < components[l].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(components[l][i]);
        }
    }
    return out;
}

Monomial::Monomial(Shape shape, std::vector<int> exponents)
    : shape_(std::move(shape)), exponents_(std::move(exponents)) {
    if (static_cast<long>(exponents_.size()) != shape_.total_cells())
        throw UsageError("exponent array does not match shape");
    for (int e : exponents_)
        if (e < 0) throw UsageError("negative exponent");
}

long Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

std::string Monomial::to_compact() const {
    std::string out;
    out.reserve(exponents_.size());
    for (int e : exponents_) {
        if (e > 9) throw UsageError("compact form requires all exponents <= 9");
        out += static_cast<char>('0' + e);
    }
    return out;
}

std::string Monomial::to_brackets() const {
    std::string out = "[";
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exponents_[i]);
    }
    out += ']';
    return out;
}

std::string Monomial::to_text() const {
    for (int e : exponents_)
        if (e > 9) return to_brackets();
    return to_compact();
}

Monomial Monomial::parse(const std::string& text, const Shape& shape) {
    std::vector<int> expo;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw UsageError("unterminated bracket monomial: '" + text + "'");
        for (long v : parse_int_list(text.substr(1, text.size() - 2)))
            expo.push_back(static_cast<int>(v));
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw UsageError("bad monomial digit string: '" + text + "'");
            expo.push_back(ch - '0');
        }
    }
    if (static_cast<long>(expo.size()) != shape.total_cells())
        throw UsageError("monomial '" + text + "' does not match shape " + shape.to_string());
    return Monomial(shape, expo);
}

bool Monomial::operator==(const Monomial& other) const {
    return shape_ == other.shape_ && exponents_ == other.exponents_;
}

bool Monomial::operator<(const Monomial& other) const {
    if (shape_ != other.shape_) throw UsageError("comparing monomials of different shapes");
    return exponents_ < other.exponents_;
}

std::vector<long> slice_sums(const Shape& shape, const std::vector<int>& exponents,
                             int direction0) {
    const int n = shape.dims().at(direction0);
    const long stride = shape.stride(direction0);
    std::vector<long> sums(n, 0);
    for (long r = 0; r < shape.total_cells(); ++r) {
        int coord = static_cast<int>((r / stride) % n);
        sums[coord] += exponents[r];
    }
    return sums;
}

WeightVector weight_of(const Shape& shape, const std::vector<int>& exponents) {
    WeightVector w;
    for (int l = 0; l < shape.ndims(); ++l) {
        std::vector<long> sums = slice_sums(shape, exponents, l);
        std::vector<long> comp(shape.dims()[l] - 1);
        for (size_t i = 0; i + 1 < sums.size(); ++i) comp[i] = sums[i] - sums[i + 1];
        w.components.push_back(std::move(comp));
    }
    return w;
}

WeightVector weight_of(const Monomial& m) { return weight_of(m.shape(), m.exponents()); }

std::optional<size_t> MonomialBasis::index_of(const std::vector<int>& expo) const {
    auto it = std::lower_bound(exponents.begin(), exponents.end(), expo);
    if (it == exponents.end() || *it != expo) return std::nullopt;
    return static_cast<size_t>(it - exponents.begin());
}

}  // namespace hyperinv
