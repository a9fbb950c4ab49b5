#include "multirank/state.hpp"

#include <algorithm>
#include <limits>

#include "multirank/error.hpp"

namespace multirank {

QuditDims::QuditDims(std::vector<std::uint32_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw DomainError("a state needs at least 2 parties, got " + std::to_string(dims_.size()));
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        const std::uint32_t d = dims_[j];
        if (d < 2) {
            throw DomainError("local dimension of party " + std::to_string(j + 1) + " must be >= 2, got " +
                              std::to_string(d));
        }
        if (total_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / d)
            throw DomainError("total dimension overflows 63 bits");
        total_ *= d;
    }
}

std::uint32_t QuditDims::max_dim() const noexcept {
    return *std::max_element(dims_.begin(), dims_.end());
}

bool Amplitude::is_valid_parameter_name(std::string_view name) {
    if (name.empty() || name == "i") return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

Amplitude Amplitude::parameter(const std::string& name, GaussianRational scale) {
    if (!is_valid_parameter_name(name)) throw DomainError("invalid parameter name '" + name + "'");
    Amplitude a;
    if (!scale.is_zero()) a.params_.emplace(name, std::move(scale));
    return a;
}

Amplitude& Amplitude::operator+=(const Amplitude& o) {
    constant_ += o.constant_;
    for (const auto& [name, c] : o.params_) {
        auto [it, inserted] = params_.try_emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) params_.erase(it);
        }
    }
    return *this;
}

Amplitude& Amplitude::operator-=(const Amplitude& o) {
    Amplitude neg = o;
    neg *= GaussianRational(-1);
    return *this += neg;
}

Amplitude& Amplitude::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        constant_ = 0;
        params_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& [name, c] : params_) c *= s;
    return *this;
}

namespace {

// Signed term for a parameter coefficient, always starting with '+' or '-'.
std::string parameter_term(const std::string& name, const GaussianRational& c) {
    if (c == GaussianRational(1)) return "+" + name;
    if (c == GaussianRational(-1)) return "-" + name;
    const bool real = sgn(c.imag()) == 0;
    const bool imag = sgn(c.real()) == 0;
    if (real || imag) {
        std::string s = c.to_string();
        if (s.front() != '-') s.insert(s.begin(), '+');
        return s + "*" + name;
    }
    return "+(" + c.to_string() + ")*" + name;
}

}  // namespace

std::string Amplitude::to_string() const {
    std::string out;
    if (!constant_.is_zero() || params_.empty()) out = constant_.to_string();
    for (const auto& [name, c] : params_) out += parameter_term(name, c);
    if (out.front() == '+') out.erase(out.begin());
    return out;
}

bool StateTensor::is_parametric() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.second.is_gaussian(); });
}

std::set<std::string> StateTensor::parameter_names() const {
    std::set<std::string> names;
    for (const auto& [idx, amp] : terms_)
        for (const auto& [name, c] : amp.parameters()) names.insert(name);
    return names;
}

StateTensor build_state(const QuditDims& dims, std::span<const Term> terms) {
    std::map<MultiIndex, Amplitude> merged;
    for (const auto& [idx, amp] : terms) {
        if (idx.size() != dims.parties()) {
            throw DomainError("multi-index has " + std::to_string(idx.size()) + " components, expected " +
                              std::to_string(dims.parties()));
        }
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= dims[j]) {
                throw DomainError("index " + std::to_string(idx[j]) + " out of range for party " +
                                  std::to_string(j + 1) + " of dimension " + std::to_string(dims[j]));
            }
        }
        merged[idx] += amp;
    }
    std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
    if (merged.empty()) throw ZeroStateError();
    return StateTensor(dims, std::move(merged));
}

StateTensor apply_local_operation(const StateTensor& state, std::size_t site, const DenseMatrix& matrix) {
    const QuditDims& dims = state.dims();
    if (site < 1 || site > dims.parties()) {
        throw DomainError("site " + std::to_string(site) + " out of range 1.." + std::to_string(dims.parties()));
    }
    const std::size_t j = site - 1;
    const std::size_t d = dims[j];
    if (matrix.rows() != d || matrix.cols() != d) {
        throw DomainError("local operation must be " + std::to_string(d) + "x" + std::to_string(d) + ", got " +
                          std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
    }
    std::vector<Term> out;
    for (const auto& [idx, amp] : state.terms()) {
        for (std::size_t r = 0; r < d; ++r) {
            const GaussianRational& m = matrix(r, idx[j]);
            if (m.is_zero()) continue;
            MultiIndex target = idx;
            target[j] = static_cast<std::uint32_t>(r);
            out.emplace_back(std::move(target), amp * m);
        }
    }
    return build_state(dims, out);
}

std::string serialize_state(const StateTensor& state) {
    const QuditDims& dims = state.dims();
    const bool digit_form = dims.max_dim() <= 10;
    std::string out = "dims";
    for (auto d : dims.values()) out += " " + std::to_string(d);
    out += "\n";
    for (const auto& [idx, amp] : state.terms()) {
        out += amp.to_string();
        out += " |";
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (digit_form) {
                out += static_cast<char>('0' + idx[j]);
            } else {
                if (j > 0) out += ",";
                out += std::to_string(idx[j]);
            }
        }
        out += ">\n";
    }
    return out;
}

}  // namespace multirank
