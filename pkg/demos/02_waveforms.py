# %% [markdown]
# # Position and momentum waveforms
#
# Samples psi_n(x) and the complex Phi_n(p) for n = 1..4, the same data the
# ``qfisher figure`` command writes as CSV.  A plot is drawn when matplotlib
# is installed (``pip install qfisher[demos]``); otherwise a few values are
# printed.

# %%
import numpy as np

from qfisher import hydrogen_phi, hydrogen_psi
from qfisher.verify import count_nodes

x = np.linspace(0.0, 40.0, 801)
p = np.linspace(-3.0, 3.0, 601)
states = [1, 2, 3, 4]

# %% [markdown]
# The n-th state has n - 1 interior nodes.

# %%
for n in states:
    print(f"psi_{n}: {count_nodes(n)} interior sign changes")

# %% [markdown]
# Phi_n(p) is genuinely complex: its real part is even in p and its
# imaginary part is odd, so ``Phi(-p) = conj(Phi(p))``.

# %%
for n in states:
    phi = hydrogen_phi(n, p)
    print(f"Phi_{n}: max|Re| = {np.max(np.abs(phi.real)):.4f}, max|Im| = {np.max(np.abs(phi.imag)):.4f}")

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
    for n in states:
        axes[0].plot(x, hydrogen_psi(n, x), label=f"n={n}")
        phi = hydrogen_phi(n, p)
        axes[1].plot(p, phi.real, label=f"n={n}")
        axes[2].plot(p, phi.imag, label=f"n={n}")
    axes[0].set(xlabel="x", title="psi_n(x)")
    axes[1].set(xlabel="p", title="Re Phi_n(p)")
    axes[2].set(xlabel="p", title="Im Phi_n(p)")
    axes[0].legend()
    fig.tight_layout()
    fig.savefig("waveforms.png", dpi=120)
    print("wrote waveforms.png")
