#include "recurv/linear_solver.hpp"

#include <cassert>
#include <stdexcept>

namespace recurv {

LinearSolveResult solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& coeffs,
    const std::vector<RationalFunction>& rhs, int nvars,
    std::span<const std::string> names) {
    LinearSolveResult out;
    std::size_t nrows = coeffs.size();
    std::size_t ncols = nrows ? coeffs[0].size() : 0;

    std::vector<std::vector<RationalFunction>> a = coeffs;
    std::vector<RationalFunction> b = rhs;

    auto record_locus = [&](const RationalFunction& piv) {
        if (!piv.num().is_constant())
            out.pivot_loci.insert(piv.num().unit_normal().str(names));
        if (!piv.den().is_constant())
            out.pivot_loci.insert(piv.den().unit_normal().str(names));
    };

    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(ncols, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t r = row; r < nrows; ++r)
            if (!a[r][col].is_zero()) { sel = r; break; }
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        record_locus(a[row][col]);
        RationalFunction inv = a[row][col].inverse();
        for (std::size_t j = col; j < ncols; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            RationalFunction f = a[r][col];
            for (std::size_t j = col; j < ncols; ++j) a[r][j] = a[r][j] - f * a[row][j];
            b[r] = b[r] - f * b[row];
        }
        col_is_pivot[col] = true;
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r) {
        if (!b[r].is_zero()) {
            out.status = LinearSolveResult::Status::Inconsistent;
            return out;
        }
    }

    out.particular.assign(ncols, RationalFunction::zero(nvars));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        out.particular[pivot_col_of_row[r]] = b[r];

    for (std::size_t col = 0; col < ncols; ++col) {
        if (col_is_pivot[col]) continue;
        std::vector<RationalFunction> v(ncols, RationalFunction::zero(nvars));
        v[col] = RationalFunction::one(nvars);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -a[r][col];
        out.null_basis.push_back(std::move(v));
    }
    out.status = out.null_basis.empty() ? LinearSolveResult::Status::Unique
                                        : LinearSolveResult::Status::Affine;
    return out;
}

bool SolutionFamily::all_consistent() const {
    for (const auto& d : directions)
        if (!d.consistent()) return false;
    return true;
}

bool SolutionFamily::any_inconsistent() const {
    for (const auto& d : directions)
        if (d.status == DirectionSolution::Status::Inconsistent) return true;
    return false;
}

bool SolutionFamily::lhs_identically_zero() const {
    for (const auto& d : directions)
        if (d.status != DirectionSolution::Status::DegenerateLhs) return false;
    return !directions.empty();
}

std::vector<Tensor> SolutionFamily::member_forms(ChartPtr chart) const {
    return member_forms(std::move(chart), {});
}

std::vector<Tensor> SolutionFamily::member_forms(
    ChartPtr chart, const std::vector<std::vector<RationalFunction>>& params) const {
    int n = chart->dimension;
    std::size_t nb = basis_names.size();
    std::vector<Tensor> forms(nb, Tensor(chart, 1, Symmetry::OneForm));
    for (int l = 0; l < n && l < static_cast<int>(directions.size()); ++l) {
        const DirectionSolution& d = directions[l];
        if (!d.consistent()) continue;
        std::vector<RationalFunction> c = d.particular;
        if (static_cast<std::size_t>(l) < params.size()) {
            const auto& t = params[l];
            for (std::size_t j = 0; j < d.null_basis.size() && j < t.size(); ++j) {
                if (t[j].is_zero()) continue;
                for (std::size_t bx = 0; bx < nb; ++bx)
                    c[bx] += d.null_basis[j][bx] * t[j];
            }
        }
        for (std::size_t bx = 0; bx < nb; ++bx) forms[bx].at({l}) = c[bx];
    }
    return forms;
}

SolutionFamily solve_linear_family(const Tensor& lhs,
                                   const std::vector<const Tensor*>& basis,
                                   const std::vector<std::string>& basis_names) {
    assert(!basis.empty());
    int n = lhs.dim();
    int k = basis[0]->rank();
    if (lhs.rank() != k + 1)
        throw TensorShapeError("solve_linear_family: lhs rank must be basis rank + 1");
    for (const Tensor* t : basis)
        if (t->rank() != k || t->dim() != n)
            throw TensorShapeError("solve_linear_family: basis rank mismatch");
    std::span<const std::string> names(lhs.chart()->coordinates);

    SolutionFamily fam;
    fam.basis_names = basis_names;
    std::size_t ntuples = basis[0]->size();

    for (int l = 0; l < n; ++l) {
        // Gather the nontrivial equations for this direction.
        std::vector<std::vector<RationalFunction>> rows;
        std::vector<RationalFunction> rhs;
        bool lhs_zero = true;
        std::vector<int> idx(k + 1);
        idx[k] = l;
        for (std::size_t fl = 0; fl < ntuples; ++fl) {
            std::size_t rem = fl;
            for (int m = k - 1; m >= 0; --m) {
                idx[m] = static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            const RationalFunction& rv = lhs.at(idx);
            bool any = !rv.is_zero();
            std::vector<RationalFunction> row;
            row.reserve(basis.size());
            for (const Tensor* t : basis) {
                const RationalFunction& c = (*t)[fl];
                any = any || !c.is_zero();
                row.push_back(c);
            }
            if (!rv.is_zero()) lhs_zero = false;
            if (any) {
                rows.push_back(std::move(row));
                rhs.push_back(rv);
            }
        }

        DirectionSolution dir;
        LinearSolveResult res =
            solve_linear_system(rows, rhs, n, names);
        dir.pivot_loci = res.pivot_loci;
        if (res.status == LinearSolveResult::Status::Inconsistent) {
            dir.status = DirectionSolution::Status::Inconsistent;
        } else {
            dir.particular = res.particular;
            dir.null_basis = res.null_basis;
            if (lhs_zero)
                dir.status = DirectionSolution::Status::DegenerateLhs;
            else
                dir.status = res.status == LinearSolveResult::Status::Unique
                                 ? DirectionSolution::Status::Unique
                                 : DirectionSolution::Status::Affine;
            if (rows.empty()) {
                // No equations at all: everything is free.
                dir.particular.assign(basis.size(), RationalFunction::zero(n));
                dir.null_basis.clear();
                for (std::size_t bx = 0; bx < basis.size(); ++bx) {
                    std::vector<RationalFunction> v(basis.size(), RationalFunction::zero(n));
                    v[bx] = RationalFunction::one(n);
                    dir.null_basis.push_back(std::move(v));
                }
                dir.status = DirectionSolution::Status::DegenerateLhs;
            }
        }
        fam.directions.push_back(std::move(dir));
    }

    // Re-substitution check of the particular solution (and of one null
    // generator shifted member) before returning.
    for (int l = 0; l < n; ++l) {
        const DirectionSolution& d = fam.directions[l];
        if (!d.consistent()) continue;
        std::vector<int> idx(k + 1);
        idx[k] = l;
        for (std::size_t fl = 0; fl < ntuples; ++fl) {
            std::size_t rem = fl;
            for (int m = k - 1; m >= 0; --m) {
                idx[m] = static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            RationalFunction acc = -lhs.at(idx);
            for (std::size_t bx = 0; bx < basis.size(); ++bx) {
                const RationalFunction& c = (*basis[bx])[fl];
                if (!c.is_zero() && !d.particular[bx].is_zero()) acc += d.particular[bx] * c;
            }
            if (!acc.is_zero())
                throw std::logic_error("solve_linear_family: re-substitution failed");
            for (const auto& nv : d.null_basis) {
                RationalFunction z(n);
                for (std::size_t bx = 0; bx < basis.size(); ++bx) {
                    const RationalFunction& c = (*basis[bx])[fl];
                    if (!c.is_zero() && !nv[bx].is_zero()) z += nv[bx] * c;
                }
                if (!z.is_zero())
                    throw std::logic_error("solve_linear_family: null vector fails");
            }
        }
    }
    return fam;
}

} // namespace recurv
