// Reference kernels: sequential loops, k-ascending accumulation, no FMA
// (the whole project builds with -ffp-contract=off). Bit-level behavior of
// these loops is a contract the autodiff regression tests rely on.

#include <cmath>

#include "diffscaler/kernels.hpp"

namespace diffscaler::kern {

namespace {

template <typename T>
void gemm_nn_ref(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc) {
  for (Index i = 0; i < m; ++i) {
    T* c = C + i * n;
    if (!acc) {
      for (Index j = 0; j < n; ++j) c[j] = T(0);
    }
    const T* a = A + i * k;
    for (Index p = 0; p < k; ++p) {
      const T av = a[p];
      const T* b = B + p * n;
      for (Index j = 0; j < n; ++j) c[j] += av * b[j];
    }
  }
}

template <typename T>
void gemm_nt_ref(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc) {
  for (Index i = 0; i < m; ++i) {
    const T* a = A + i * k;
    for (Index j = 0; j < n; ++j) {
      const T* b = B + j * k;
      T s = T(0);
      for (Index p = 0; p < k; ++p) s += a[p] * b[p];
      C[i * n + j] = acc ? C[i * n + j] + s : s;
    }
  }
}

template <typename T>
void gemm_tn_ref(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc) {
  if (!acc) {
    for (Index i = 0; i < m * n; ++i) C[i] = T(0);
  }
  for (Index p = 0; p < k; ++p) {
    const T* a = A + p * m;
    const T* b = B + p * n;
    for (Index i = 0; i < m; ++i) {
      const T av = a[i];
      T* c = C + i * n;
      for (Index j = 0; j < n; ++j) c[j] += av * b[j];
    }
  }
}

template <typename T>
void add_ref(const T* x, const T* y, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] = x[i] + y[i];
}

template <typename T>
void sub_ref(const T* x, const T* y, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

template <typename T>
void mul_ref(const T* x, const T* y, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

template <typename T>
void scale_ref(const T* x, T a, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] = a * x[i];
}

template <typename T>
void axpy_ref(T a, const T* x, T* y, Index n) {
  for (Index i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
void addmul_acc_ref(const T* x, const T* y, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] += x[i] * y[i];
}

template <typename T>
void relu_ref(const T* x, T* out, Index n) {
  for (Index i = 0; i < n; ++i) out[i] = x[i] > T(0) ? x[i] : T(0);
}

template <typename T>
void relu_bwd_ref(const T* x, const T* dy, T* dx, Index n) {
  for (Index i = 0; i < n; ++i) {
    if (x[i] > T(0)) dx[i] += dy[i];
  }
}

template <typename T>
T sum_ref(const T* x, Index n) {
  T s = T(0);
  for (Index i = 0; i < n; ++i) s += x[i];
  return s;
}

template <typename T>
T dot_ref(const T* x, const T* y, Index n) {
  T s = T(0);
  for (Index i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

template <typename T>
T sumsq_diff_ref(const T* x, T mu, Index n) {
  T s = T(0);
  for (Index i = 0; i < n; ++i) {
    const T d = x[i] - mu;
    s += d * d;
  }
  return s;
}

template <typename T>
T rowmax_ref(const T* x, Index n) {
  T m = x[0];
  for (Index i = 1; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

template <typename T>
bool all_finite_ref(const T* x, Index n) {
  for (Index i = 0; i < n; ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

template <typename T>
void adam_step_ref(T* p, const T* g, T* m, T* v, Index n, T lr, T b1, T b2, T eps,
                   T inv_bc1, T inv_bc2) {
  const T c1 = T(1) - b1;
  const T c2 = T(1) - b2;
  for (Index i = 0; i < n; ++i) {
    m[i] = b1 * m[i] + c1 * g[i];
    v[i] = b2 * v[i] + c2 * (g[i] * g[i]);
    const T mhat = m[i] * inv_bc1;
    const T vhat = v[i] * inv_bc2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace

template <typename T>
KernelTable<T> make_scalar_table() {
  KernelTable<T> t;
  t.gemm_nn = gemm_nn_ref<T>;
  t.gemm_nt = gemm_nt_ref<T>;
  t.gemm_tn = gemm_tn_ref<T>;
  t.add = add_ref<T>;
  t.sub = sub_ref<T>;
  t.mul = mul_ref<T>;
  t.scale = scale_ref<T>;
  t.axpy = axpy_ref<T>;
  t.addmul_acc = addmul_acc_ref<T>;
  t.relu = relu_ref<T>;
  t.relu_bwd = relu_bwd_ref<T>;
  t.sum = sum_ref<T>;
  t.dot = dot_ref<T>;
  t.sumsq_diff = sumsq_diff_ref<T>;
  t.rowmax = rowmax_ref<T>;
  t.all_finite = all_finite_ref<T>;
  t.adam_step = adam_step_ref<T>;
  return t;
}

template KernelTable<float> make_scalar_table<float>();
template KernelTable<double> make_scalar_table<double>();

}  // namespace diffscaler::kern
