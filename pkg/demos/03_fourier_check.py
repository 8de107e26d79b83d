# %% [markdown]
# # Checking the momentum waveform against a numerical Fourier transform
#
# The closed-form Phi_n(p) is compared with the transform
# ``(2 pi)^(-1/2) int_0^inf exp(-ipx) psi_n(x) dx`` evaluated by adaptive
# quadrature.  A real-valued guess (here the modulus |Phi_n|) has the right
# density |Phi|^2 but fails both the transform comparison and momentum-space
# orthogonality.

# %%
import numpy as np

from qfisher import Finite, Space, fourier_transform_numeric, hydrogen_cutoff, hydrogen_phi, hydrogen_psi, inner_product
from qfisher.verify import real_phi

grid = np.linspace(-5.0, 5.0, 41)

# %%
for n in range(1, 6):
    dom = Finite(0.0, hydrogen_cutoff(n))
    numeric = np.array([fourier_transform_numeric(lambda x: hydrogen_psi(n, x), q, dom) for q in grid])
    err_closed = np.max(np.abs(numeric - hydrogen_phi(n, grid)))
    err_real = np.max(np.abs(numeric - real_phi(n, grid)))
    print(f"n={n}: |numeric - complex form| = {err_closed:.1e},  |numeric - real form| = {err_real:.3f}")

# %% [markdown]
# Orthogonality in momentum space, <1|2>:

# %%
good, _ = inner_product(1, 2, Space.MOMENTUM)
bad, _ = inner_product(1, 2, Space.MOMENTUM, phi=real_phi)
print(f"complex Phi: {abs(good):.1e}   real Phi: {abs(bad):.3f}")
