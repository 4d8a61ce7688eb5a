"""Spectral differentiation and quadrature accuracy on the periodic box.

Differentiates profiles with known closed-form derivatives at several
resolutions and prints the max-norm errors: exponential convergence until
the rounding floor, the signature of Fourier differentiation.
"""

import numpy as np

from gkdv import Field, Grid, integrate, spectral_derivative


def sech(x):
    return 1.0 / np.cosh(x)


def main():
    print("derivative of sech^2(x/2) vs the closed form, L = 100:")
    print(f"{'n':>6} {'max error':>12}")
    for n in (64, 128, 256, 512, 1024):
        g = Grid(100.0, n)
        f = Field.from_function(g, lambda x: sech(x / 2) ** 2)
        exact = -sech(g.points / 2) ** 2 * np.tanh(g.points / 2)
        err = np.max(np.abs(spectral_derivative(f, 1).values - exact))
        print(f"{n:6d} {err:12.3e}")

    print("\nthird derivative of a Gaussian, L = 50:")
    print(f"{'n':>6} {'max error':>12}")
    for n in (64, 128, 256, 512):
        g = Grid(50.0, n)
        f = Field.from_function(g, lambda x: np.exp(-x * x))
        x = g.points
        exact = (12.0 * x - 8.0 * x ** 3) * np.exp(-x * x)
        err = np.max(np.abs(spectral_derivative(f, 3).values - exact))
        print(f"{n:6d} {err:12.3e}")

    print("\nquadrature: int sech^2 = 2 on L = 50:")
    for n in (128, 512, 2048):
        g = Grid(50.0, n)
        val = integrate(Field.from_function(g, lambda x: sech(x) ** 2))
        print(f"{n:6d} {abs(val - 2.0):12.3e}")


if __name__ == "__main__":
    main()
