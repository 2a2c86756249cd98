#include "recurv/tensor.hpp"

#include <cassert>
#include <cmath>

namespace recurv {

Tensor::Tensor(ChartPtr chart, int rank, Symmetry sym)
    : chart_(std::move(chart)), rank_(rank), sym_(sym) {
    assert(rank_ >= 0);
    std::size_t count = 1;
    for (int i = 0; i < rank_; ++i) count *= static_cast<std::size_t>(dim());
    comps_.assign(count, RationalFunction::zero(dim()));
}

std::size_t Tensor::flat(std::span<const int> idx) const {
    assert(static_cast<int>(idx.size()) == rank_);
    std::size_t f = 0;
    for (int i = 0; i < rank_; ++i) {
        assert(idx[i] >= 0 && idx[i] < dim());
        f = f * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(idx[i]);
    }
    return f;
}

void Tensor::unflatten(std::size_t flat, std::span<int> idx) const {
    for (int i = rank_ - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(flat % static_cast<std::size_t>(dim()));
        flat /= static_cast<std::size_t>(dim());
    }
}

bool Tensor::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool Tensor::operator==(const Tensor& o) const {
    return rank_ == o.rank_ && dim() == o.dim() && comps_ == o.comps_;
}

Tensor Tensor::operator-() const {
    Tensor r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r += b;
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r -= b;
    return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    assert(rank_ == o.rank_ && dim() == o.dim());
    if (sym_ != o.sym_) sym_ = Symmetry::General;
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    assert(rank_ == o.rank_ && dim() == o.dim());
    if (sym_ != o.sym_) sym_ = Symmetry::General;
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

Tensor Tensor::scaled(const RationalFunction& f) const {
    Tensor r = *this;
    for (auto& c : r.comps_) c = c * f;
    return r;
}

bool Tensor::symmetry_valid() const {
    int n = dim();
    switch (sym_) {
        case Symmetry::General:
            return true;
        case Symmetry::OneForm:
            return rank_ == 1;
        case Symmetry::Symmetric2: {
            if (rank_ != 2) return false;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (at({i, j}) != at({j, i})) return false;
            return true;
        }
        case Symmetry::TwoForm: {
            if (rank_ != 2) return false;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    if (at({i, j}) != -at({j, i})) return false;
            return true;
        }
        case Symmetry::CurvatureType4: {
            if (rank_ != 4) return false;
            for (int h = 0; h < n; ++h)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            const auto& t = at({h, i, j, k});
                            if (t != -at({i, h, j, k})) return false;
                            if (t != -at({h, i, k, j})) return false;
                            if (t != at({j, k, h, i})) return false;
                        }
            return true;
        }
    }
    return false;
}

Tensor one_form(ChartPtr chart, std::span<const RationalFunction> comps) {
    Tensor t(chart, 1, Symmetry::OneForm);
    assert(static_cast<int>(comps.size()) == chart->dimension);
    for (int i = 0; i < chart->dimension; ++i) t.at({i}) = comps[i];
    return t;
}

Tensor zero_one_form(ChartPtr chart) { return Tensor(chart, 1, Symmetry::OneForm); }

Tensor coordinate_one_form(ChartPtr chart, int direction) {
    Tensor t(chart, 1, Symmetry::OneForm);
    t.at({direction}) = RationalFunction::one(chart->dimension);
    return t;
}

} // namespace recurv
