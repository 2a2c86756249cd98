#ifndef RECURV_TENSOR_HPP
#define RECURV_TENSOR_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "recurv/chart.hpp"
#include "recurv/rational_function.hpp"

namespace recurv {

enum class Symmetry { General, Symmetric2, OneForm, TwoForm, CurvatureType4 };

// Dense covariant tensor field: components over all n^k index tuples, indices
// 0-based internally. The symmetry tag is validated, not assumed.
class Tensor {
public:
    Tensor(ChartPtr chart, int rank, Symmetry sym = Symmetry::General);

    const ChartPtr& chart() const { return chart_; }
    int dim() const { return chart_->dimension; }
    int rank() const { return rank_; }
    Symmetry symmetry() const { return sym_; }
    void set_symmetry(Symmetry s) { sym_ = s; }
    std::size_t size() const { return comps_.size(); }

    std::size_t flat(std::span<const int> idx) const;
    RationalFunction& at(std::span<const int> idx) { return comps_[flat(idx)]; }
    const RationalFunction& at(std::span<const int> idx) const { return comps_[flat(idx)]; }
    RationalFunction& at(std::initializer_list<int> idx) {
        return comps_[flat(std::span<const int>(idx.begin(), idx.size()))];
    }
    const RationalFunction& at(std::initializer_list<int> idx) const {
        return comps_[flat(std::span<const int>(idx.begin(), idx.size()))];
    }
    RationalFunction& operator[](std::size_t i) { return comps_[i]; }
    const RationalFunction& operator[](std::size_t i) const { return comps_[i]; }

    void unflatten(std::size_t flat, std::span<int> idx) const;

    bool is_zero() const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Tensor operator-() const;
    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    Tensor scaled(const RationalFunction& f) const;
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);

    // Checks the components against the declared symmetry tag.
    bool symmetry_valid() const;

    // Iterate all index tuples in lexicographic order.
    template <typename F>
    void for_each_index(F&& f) const {
        std::vector<int> idx(rank_, 0);
        for (std::size_t fl = 0; fl < comps_.size(); ++fl) {
            unflatten(fl, idx);
            f(std::span<const int>(idx), fl);
        }
    }

private:
    ChartPtr chart_;
    int rank_;
    Symmetry sym_;
    std::vector<RationalFunction> comps_;
};

// 1-form helpers used throughout the detectors.
Tensor one_form(ChartPtr chart, std::span<const RationalFunction> comps);
Tensor zero_one_form(ChartPtr chart);
Tensor coordinate_one_form(ChartPtr chart, int direction); // dx^i

} // namespace recurv

#endif
