#pragma once

#include <string>

#include "diffscaler/common.hpp"

// Inner-loop kernels. Scalar implementations are the reference semantics:
// plain IEEE ops, sequential k-ascending reductions, no contraction. The AVX2
// variants keep a fixed internal lane order so each backend is deterministic
// on its own; see tests/test_kernels.cpp for the equivalence contract
// (bit-exact for elementwise kernels, bounded relative error for reductions).

namespace diffscaler::kern {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
void set_backend(Backend b);  // throws ConfigError if unsupported

// Picks DIFFSCALER_KERNELS=scalar|avx2 if set, else best supported.
Backend detect_backend();

template <typename T>
struct KernelTable {
  // C[m,n] (+)= A[m,k] * B[k,n]
  void (*gemm_nn)(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc);
  // C[m,n] (+)= A[m,k] * B[n,k]^T   (dot products of rows)
  void (*gemm_nt)(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc);
  // C[m,n] (+)= A[k,m]^T * B[k,n]
  void (*gemm_tn)(const T* A, const T* B, T* C, Index m, Index k, Index n, bool acc);

  void (*add)(const T* x, const T* y, T* out, Index n);
  void (*sub)(const T* x, const T* y, T* out, Index n);
  void (*mul)(const T* x, const T* y, T* out, Index n);
  void (*scale)(const T* x, T a, T* out, Index n);
  void (*axpy)(T a, const T* x, T* y, Index n);                  // y += a*x
  void (*addmul_acc)(const T* x, const T* y, T* out, Index n);   // out += x*y
  void (*relu)(const T* x, T* out, Index n);
  void (*relu_bwd)(const T* x, const T* dy, T* dx, Index n);     // dx += dy*(x>0)

  T (*sum)(const T* x, Index n);
  T (*dot)(const T* x, const T* y, Index n);
  T (*sumsq_diff)(const T* x, T mu, Index n);                    // sum((x-mu)^2)
  T (*rowmax)(const T* x, Index n);
  bool (*all_finite)(const T* x, Index n);

  // m = b1*m+(1-b1)*g; v = b2*v+(1-b2)*g^2; p -= lr*(m*inv_bc1)/(sqrt(v*inv_bc2)+eps)
  void (*adam_step)(T* p, const T* g, T* m, T* v, Index n, T lr, T b1, T b2, T eps,
                    T inv_bc1, T inv_bc2);
};

template <typename T>
const KernelTable<T>& table();

// Table for a specific backend; nullptr when unsupported on this CPU.
template <typename T>
const KernelTable<T>* table_for(Backend b);

}  // namespace diffscaler::kern
