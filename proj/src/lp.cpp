#include "esgeo/lp.hpp"

#include <algorithm>

namespace esgeo {

namespace {

class Simplex {
  public:
    Simplex(const Matrix& A, std::vector<Rat> b) : m_(static_cast<int>(A.size())) {
        n_ = m_ > 0 ? static_cast<int>(A[0].size()) : 0;
        for (const auto& row : A)
            if (static_cast<int>(row.size()) != n_) fail(ErrKind::Invalid, "ragged LP matrix");
        if (static_cast<int>(b.size()) != m_) fail(ErrKind::Invalid, "rhs size mismatch");
        flip_.assign(static_cast<size_t>(m_), false);
        tab_.assign(static_cast<size_t>(m_), std::vector<Rat>(static_cast<size_t>(n_ + m_ + 1)));
        basis_.resize(static_cast<size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            bool flip = sign(b[static_cast<size_t>(i)]) < 0;
            flip_[static_cast<size_t>(i)] = flip;
            for (int j = 0; j < n_; ++j)
                tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    flip ? -A[static_cast<size_t>(i)][static_cast<size_t>(j)] : A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            tab_[static_cast<size_t>(i)][static_cast<size_t>(n_ + i)] = 1;
            rhs(i) = flip ? -b[static_cast<size_t>(i)] : b[static_cast<size_t>(i)];
            basis_[static_cast<size_t>(i)] = n_ + i;
        }
    }

    LpResult run(const std::vector<Rat>& c) {
        LpResult res;
        // Phase one: minimize the sum of artificials.
        std::vector<Rat> c1(static_cast<size_t>(n_ + m_), Rat(0));
        for (int j = n_; j < n_ + m_; ++j) c1[static_cast<size_t>(j)] = 1;
        bool bounded = iterate(c1, /*allow_artificial_entering=*/false);
        (void)bounded;  // phase one is always bounded below by zero
        Rat art_sum = objective(c1);
        if (sign(art_sum) > 0) {
            res.status = LpResult::Status::Infeasible;
            res.farkas = dual(c1);
            return res;
        }
        // Phase two on the real objective; artificials may stay basic at
        // zero but can never re-enter.
        std::vector<Rat> c2(static_cast<size_t>(n_ + m_), Rat(0));
        for (int j = 0; j < n_ && j < static_cast<int>(c.size()); ++j) c2[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        if (!iterate(c2, false)) {
            res.status = LpResult::Status::Unbounded;
            return res;
        }
        res.status = LpResult::Status::Optimal;
        res.objective = objective(c2);
        res.x.assign(static_cast<size_t>(n_), Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[static_cast<size_t>(i)] < n_) res.x[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = rhs(i);
        res.farkas = dual(c2);
        return res;
    }

  private:
    Rat& rhs(int i) { return tab_[static_cast<size_t>(i)][static_cast<size_t>(n_ + m_)]; }

    Rat objective(const std::vector<Rat>& c) {
        Rat v = 0;
        for (int i = 0; i < m_; ++i) v += c[static_cast<size_t>(basis_[static_cast<size_t>(i)])] * rhs(i);
        return v;
    }

    // y = c_B B^{-1}, read off the artificial columns; signs are mapped
    // back through the row flips so the certificate fits the caller's A, b.
    std::vector<Rat> dual(const std::vector<Rat>& c) {
        std::vector<Rat> y(static_cast<size_t>(m_), Rat(0));
        for (int k = 0; k < m_; ++k) {
            Rat v = 0;
            for (int i = 0; i < m_; ++i)
                v += c[static_cast<size_t>(basis_[static_cast<size_t>(i)])] *
                     tab_[static_cast<size_t>(i)][static_cast<size_t>(n_ + k)];
            y[static_cast<size_t>(k)] = flip_[static_cast<size_t>(k)] ? Rat(-v) : v;
        }
        return y;
    }

    // Bland's rule: least-index entering among negative reduced costs,
    // least basis index breaking ratio-test ties. Returns false when the
    // objective is unbounded below.
    bool iterate(const std::vector<Rat>& c, bool allow_artificial_entering) {
        for (;;) {
            int enter = -1;
            Rat enter_rc;
            for (int j = 0; j < n_ + m_; ++j) {
                if (j >= n_ && !allow_artificial_entering) continue;
                bool basic = false;
                for (int i = 0; i < m_; ++i)
                    if (basis_[static_cast<size_t>(i)] == j) {
                        basic = true;
                        break;
                    }
                if (basic) continue;
                Rat rc = c[static_cast<size_t>(j)];
                for (int i = 0; i < m_; ++i)
                    rc -= c[static_cast<size_t>(basis_[static_cast<size_t>(i)])] *
                          tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (sign(rc) < 0) {
                    enter = j;
                    enter_rc = rc;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < m_; ++i) {
                const Rat& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (sign(a) <= 0) continue;
                Rat ratio = rhs(i) / a;
                if (leave < 0 || cmp(ratio, best_ratio) < 0 ||
                    (cmp(ratio, best_ratio) == 0 &&
                     basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat piv = tab_[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& v : tab_[static_cast<size_t>(row)]) v /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            Rat f = tab_[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (sign(f) == 0) continue;
            for (int j = 0; j <= n_ + m_; ++j)
                tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * tab_[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        basis_[static_cast<size_t>(row)] = col;
    }

    int m_, n_;
    Matrix tab_;
    std::vector<int> basis_;
    std::vector<bool> flip_;
};

}  // namespace

LpResult lp_minimize(const Matrix& A, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    Simplex s(A, b);
    return s.run(c);
}

LpResult lp_feasible(const Matrix& A, const std::vector<Rat>& b) {
    size_t n = A.empty() ? 0 : A[0].size();
    return lp_minimize(A, b, std::vector<Rat>(n, Rat(0)));
}

}  // namespace esgeo
