#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

namespace circuitsmith {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// left * A * right = diag(d_1, ..., d_rank, 0, ...), d_i > 0 and d_i | d_{i+1}.
template <typename Scalar>
struct SmithDecomposition {
  IntMatrix<Scalar> left;
  IntMatrix<Scalar> left_inverse;
  IntMatrix<Scalar> right;
  IntMatrix<Scalar> right_inverse;
  std::vector<Scalar> invariant_factors;
  Eigen::Index rank = 0;
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Elementary operations on A that keep the unimodular factors in sync.
template <typename Scalar>
class SmithWork {
 public:
  SmithWork(IntMatrix<Scalar> a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      out_.left = IntMatrix<Scalar>::Identity(a_.rows(), a_.rows());
      out_.left_inverse = out_.left;
      out_.right = IntMatrix<Scalar>::Identity(a_.cols(), a_.cols());
      out_.right_inverse = out_.right;
    }
  }

  IntMatrix<Scalar>& a() { return a_; }
  SmithDecomposition<Scalar>& result() { return out_; }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.row(i).swap(a_.row(j));
    if (track_) {
      out_.left.row(i).swap(out_.left.row(j));
      out_.left_inverse.col(i).swap(out_.left_inverse.col(j));
    }
  }

  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.col(i).swap(a_.col(j));
    if (track_) {
      out_.right.col(i).swap(out_.right.col(j));
      out_.right_inverse.row(i).swap(out_.right_inverse.row(j));
    }
  }

  // row_i += c * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Scalar& c) {
    for (Eigen::Index t = 0; t < a_.cols(); ++t) a_(i, t) += c * a_(j, t);
    if (!track_) return;
    for (Eigen::Index t = 0; t < out_.left.cols(); ++t) out_.left(i, t) += c * out_.left(j, t);
    for (Eigen::Index t = 0; t < out_.left_inverse.rows(); ++t) {
      out_.left_inverse(t, j) -= c * out_.left_inverse(t, i);
    }
  }

  // col_j += c * col_i
  void add_col(Eigen::Index j, Eigen::Index i, const Scalar& c) {
    for (Eigen::Index t = 0; t < a_.rows(); ++t) a_(t, j) += c * a_(t, i);
    if (!track_) return;
    for (Eigen::Index t = 0; t < out_.right.rows(); ++t) out_.right(t, j) += c * out_.right(t, i);
    for (Eigen::Index t = 0; t < out_.right_inverse.cols(); ++t) {
      out_.right_inverse(i, t) -= c * out_.right_inverse(j, t);
    }
  }

  void negate_row(Eigen::Index i) {
    for (Eigen::Index t = 0; t < a_.cols(); ++t) a_(i, t) = -a_(i, t);
    if (!track_) return;
    for (Eigen::Index t = 0; t < out_.left.cols(); ++t) out_.left(i, t) = -out_.left(i, t);
    for (Eigen::Index t = 0; t < out_.left_inverse.rows(); ++t) {
      out_.left_inverse(t, i) = -out_.left_inverse(t, i);
    }
  }

 private:
  IntMatrix<Scalar> a_;
  bool track_;
  SmithDecomposition<Scalar> out_;
};

}  // namespace detail

/// Smith normal form by pivot-minimizing elimination. With `track` false
/// only the invariant factors and rank are filled in.
template <typename Scalar>
SmithDecomposition<Scalar> smith_decompose(IntMatrix<Scalar> matrix, bool track = true) {
  using detail::magnitude;
  detail::SmithWork<Scalar> w(std::move(matrix), track);
  auto& a = w.a();
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  Eigen::Index t = 0;
  for (; t < rows && t < cols; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Eigen::Index j = t; j < cols; ++j) {
        for (Eigen::Index i = t; i < rows; ++i) {
          if (a(i, j) == 0) continue;
          const Scalar m = magnitude(a(i, j));
          if (pi < 0 || m < best) {
            best = m;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
        if (pi >= 0 && best == 1) break;
      }
      if (pi < 0) goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        w.add_row(i, t, Scalar(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        w.add_col(j, t, Scalar(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull any offending row into the pivot row and retry.
      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < rows && offender < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender < 0) break;
      w.add_row(t, offender, Scalar(1));
    }
    if (a(t, t) < 0) w.negate_row(t);
  }
done:
  auto& out = w.result();
  out.rank = t;
  for (Eigen::Index i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  return std::move(out);
}

}  // namespace circuitsmith
