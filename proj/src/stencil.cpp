#include "pleb/stencil.hpp"

#include "pleb/exact.hpp"

// Explicit instantiations for the two scalar types used throughout, so the
// template bodies are compiled once instead of in every includer.

namespace pleb {

template struct Stencil<double>;
template struct Stencil<RootTwo>;
template struct SecondOrder<double>;
template struct SecondOrder<RootTwo>;

#define PLEB_STENCIL_INSTANTIATE(T)                                                            \
  template Stencil<T> operator+(const Stencil<T>&, const Stencil<T>&);                        \
  template Stencil<T> operator-(const Stencil<T>&, const Stencil<T>&);                        \
  template Stencil<T> stencil_scaled(const Stencil<T>&, const T&);                            \
  template Stencil<T> map_after(const FiberMat<T>&, const Stencil<T>&);                       \
  template Stencil<T> map_before(const Stencil<T>&, const FiberMat<T>&);                      \
  template bool stencil_is_zero(const Stencil<T>&);                                           \
  template bool stencil_equal(const Stencil<T>&, const Stencil<T>&);                          \
  template FiberMat<T> symbol_matrix(const Stencil<T>&, const std::array<T, 4>&);             \
  template FiberMat<T> fibermat_inverse(const FiberMat<T>&);                                  \
  template Stencil<T> stencil_adjoint(const Stencil<T>&, const FiberMat<T>&,                  \
                                      const FiberMat<T>&);                                    \
  template SecondOrder<T> compose(const Stencil<T>&, const Stencil<T>&);                      \
  template SecondOrder<T> operator+(const SecondOrder<T>&, const SecondOrder<T>&);            \
  template SecondOrder<T> operator-(const SecondOrder<T>&, const SecondOrder<T>&);            \
  template bool second_order_is_zero(const SecondOrder<T>&);                                  \
  template SecondOrder<T> laplacian_form(const Mat4<T>&, const FiberMat<T>&);

PLEB_STENCIL_INSTANTIATE(double)
PLEB_STENCIL_INSTANTIATE(RootTwo)

#undef PLEB_STENCIL_INSTANTIATE

}  // namespace pleb
