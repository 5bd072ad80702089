#pragma once
#include "gs/field.hpp"
#include "gs/kernel.hpp"

namespace gs {

/// Fourier-symbol extrema of a translation-invariant diffusion operator.
/// Both are <= 0; the most negative value drives the explicit-step bound.
struct StencilSymbol {
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
};

enum class ConvolutionPath { spectral, direct };

/// Isotropic 9-point Laplacian with periodic wrap, scaled by 1/h^2:
/// center -1, axis neighbors 0.2, diagonal neighbors 0.05. Computed in
/// neighbor-difference form so constant fields map to exactly zero.
Field laplacian9(const Field& f, double h);

/// Nonlocal diffusion Gamma f = (phi * f) - total_mass * f. Equals the
/// pointwise sum phi(x,y)[f(y)-f(x)] for this circulant kernel, one
/// convolution cheaper.
Field nonlocal_gamma(const DiscreteKernel& k, const Field& f,
                     ConvolutionPath path = ConvolutionPath::spectral);

/// Closed-form symbol of the h=1 stencil at wavevector (a,b):
/// s(a,b) = -1 + 0.4(cos a + cos b) + 0.2 cos a cos b.
double laplacian9_symbol(double a, double b);

/// Analytic extrema of s(a,b)/h^2 over all wavevectors: (-1.6/h^2, 0).
StencilSymbol laplacian9_symbol_range(double h = 1.0);

/// Extrema of the Gamma symbol Re(phi_hat) - total_mass, found by exhaustive
/// scan of the cached spectrum. Max is 0 (attained at wavevector zero for a
/// unit-mass kernel).
StencilSymbol gamma_symbol_range(const DiscreteKernel& k);

} // namespace gs
