#include "relext/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace relext {

namespace {

Integer igcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// Scale a rational row to a primitive integer row (content 1). Keeps
// elimination over Q fraction-free.
void make_primitive(std::vector<Scalar>& row) {
    Integer l(1);
    for (const Scalar& x : row)
        if (!x.is_zero())
            l = l / igcd(l, denominator(x)) * denominator(x);
    Integer g(0);
    for (Scalar& x : row) {
        if (x.is_zero())
            continue;
        x *= l;
        g = igcd(g, numerator(x));
    }
    if (g > 1)
        for (Scalar& x : row)
            x /= g;
}

} // namespace

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = f.one();
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_internal(cols_ == o.rows_, "matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero())
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.mul(data_[i], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& v) {
    check_internal(v.size() == cols_, "row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v, const Matrix& m) {
    check_internal(v.size() == m.rows_, "vector-matrix shape mismatch");
    std::vector<Scalar> r(m.cols_, m.field_.zero());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols_; ++j) {
            const Scalar& b = m.at(i, j);
            if (!b.is_zero())
                r[j] = m.field_.add(r[j], m.field_.mul(v[i], b));
        }
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_internal(cols_ == o.cols_ || rows_ == 0 || o.rows_ == 0, "vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, std::max(cols_, o.cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::vector<std::size_t> Matrix::rref() {
    const bool rational = field_.kind() == Field::Kind::Rationals;
    if (rational)
        for (std::size_t i = 0; i < rows_; ++i) {
            std::vector<Scalar> r = row(i);
            make_primitive(r);
            set_row(i, r);
        }

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t piv = lead;
        while (piv < rows_ && at(piv, col).is_zero())
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(piv, j), at(lead, j));
        const Scalar p = at(lead, col);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || at(i, col).is_zero())
                continue;
            const Scalar c = at(i, col);
            if (rational) {
                // cross-multiplied update keeps entries integral
                for (std::size_t j = 0; j < cols_; ++j)
                    at(i, j) = p * at(i, j) - c * at(lead, j);
                std::vector<Scalar> r = row(i);
                make_primitive(r);
                set_row(i, r);
            } else {
                const Scalar f = field_.div(c, p);
                for (std::size_t j = 0; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(f, at(lead, j)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    // scale pivots to 1 only at the end
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Scalar p = at(r, pivots[r]);
        if (p == field_.one())
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(r, j).is_zero())
                at(r, j) = field_.div(at(r, j), p);
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

Matrix Matrix::left_kernel() const {
    LeftSolver s(*this);
    return s.kernel();
}

Matrix Matrix::express_rows(const Matrix& sub) const {
    LeftSolver s(*this);
    Matrix x(field_, sub.rows(), rows_);
    std::vector<Scalar> sol;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        if (!s.solve(sub.row(i), sol))
            internal_error("express_rows: row outside the row space");
        x.set_row(i, sol);
    }
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << field_.str(at(i, j));
        os << "]\n";
    }
    return os.str();
}

LeftSolver::LeftSolver(const Matrix& a)
    : field_(a.field()), n_(a.rows()),
      red_(a.field(), a.rows(), a.cols() + a.rows()),
      kernel_(a.field(), 0, a.rows()) {
    const std::size_t cols = a.cols();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            red_.at(i, j) = a.at(i, j);
        red_.at(i, cols + i) = field_.one();
    }

    const bool rational = field_.kind() == Field::Kind::Rationals;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < n_; ++col) {
        std::size_t piv = lead;
        while (piv < n_ && red_.at(piv, col).is_zero())
            ++piv;
        if (piv == n_)
            continue;
        if (piv != lead)
            for (std::size_t j = 0; j < red_.cols(); ++j)
                std::swap(red_.at(piv, j), red_.at(lead, j));
        const Scalar p = red_.at(lead, col);
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == lead || red_.at(i, col).is_zero())
                continue;
            const Scalar c = red_.at(i, col);
            if (rational) {
                for (std::size_t j = 0; j < red_.cols(); ++j)
                    red_.at(i, j) = p * red_.at(i, j) - c * red_.at(lead, j);
                std::vector<Scalar> r = red_.row(i);
                make_primitive(r);
                red_.set_row(i, r);
            } else {
                const Scalar f = field_.div(c, p);
                for (std::size_t j = 0; j < red_.cols(); ++j)
                    red_.at(i, j) = field_.sub(red_.at(i, j), field_.mul(f, red_.at(lead, j)));
            }
        }
        pivots_.push_back(col);
        ++lead;
    }
    echelon_rows_ = lead;

    // rows whose A-part vanished carry left-kernel combinations in the I-part
    Matrix ker(field_, n_ - lead, n_);
    for (std::size_t i = lead; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            ker.at(i - lead, j) = red_.at(i, cols + j);
    ker.rref();
    kernel_ = std::move(ker);
}

bool LeftSolver::solve(const std::vector<Scalar>& rhs, std::vector<Scalar>& out) const {
    std::vector<Scalar> residue = rhs;
    std::vector<Scalar> x(n_, field_.zero());
    const std::size_t cols = red_.cols() - n_;
    check_internal(rhs.size() == cols, "solve: rhs length mismatch");
    for (std::size_t r = 0; r < echelon_rows_; ++r) {
        const std::size_t pc = pivots_[r];
        if (residue[pc].is_zero())
            continue;
        const Scalar c = field_.div(residue[pc], red_.at(r, pc));
        for (std::size_t j = 0; j < cols; ++j)
            if (!red_.at(r, j).is_zero())
                residue[j] = field_.sub(residue[j], field_.mul(c, red_.at(r, j)));
        for (std::size_t j = 0; j < n_; ++j)
            if (!red_.at(r, cols + j).is_zero())
                x[j] = field_.add(x[j], field_.mul(c, red_.at(r, cols + j)));
    }
    for (const Scalar& v : residue)
        if (!v.is_zero())
            return false;
    out = std::move(x);
    return true;
}

EchelonSet::SparseRow EchelonSet::normalize(const Field& f, SparseRow row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, v] : row) {
        if (!out.empty() && out.back().first == c)
            out.back().second = f.add(out.back().second, v);
        else
            out.emplace_back(c, v);
        if (!out.empty() && out.back().second.is_zero())
            out.pop_back();
    }
    return out;
}

EchelonSet::SparseRow EchelonSet::reduce(SparseRow row) const {
    row = normalize(field_, row);
    // sweep from the largest coordinate down; each subtraction only touches
    // coordinates at or below the eliminated pivot
    SparseRow done; // residue coordinates above the sweep position, descending
    while (!row.empty()) {
        auto [coord, coeff] = row.back();
        auto it = rows_.find(coord);
        if (it == rows_.end()) {
            done.emplace_back(coord, coeff);
            row.pop_back();
            continue;
        }
        row.pop_back();
        // stored rows have pivot coefficient 1
        SparseRow sub;
        sub.reserve(it->second.size());
        for (const auto& [c, v] : it->second)
            if (c != coord)
                sub.emplace_back(c, field_.neg(field_.mul(coeff, v)));
        if (!sub.empty()) {
            row.insert(row.end(), sub.begin(), sub.end());
            row = normalize(field_, row);
        }
    }
    std::reverse(done.begin(), done.end());
    return done;
}

bool EchelonSet::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    const auto [piv, coeff] = row.back();
    if (coeff != field_.one()) {
        const Scalar inv = field_.inv(coeff);
        for (auto& [c, v] : row)
            v = field_.mul(v, inv);
    }
    rows_.emplace(piv, std::move(row));
    return true;
}

} // namespace relext
