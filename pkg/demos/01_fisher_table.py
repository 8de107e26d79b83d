# %% [markdown]
# # Fisher information of the half-line hydrogen atom
#
# Position-space Fisher information ``I_rho = 4 int psi'^2 dx`` and its
# momentum-space partner ``I_gamma = int gamma'^2 / gamma dp`` are computed
# by adaptive quadrature and compared with the closed forms ``4/n^2`` and
# ``2n^2``.  Their product is 8 for every state, and both are fixed by the
# energy alone: ``I_rho = 8|E_n|`` and ``I_gamma = 1/|E_n|``.

# %%
import numpy as np

from qfisher import BoundState, System, build_report, hydrogen_energy

# %%
print(f"{'n':>3} {'E_n':>12} {'I_rho':>14} {'4/n^2':>10} {'I_gamma':>12} {'product':>18}")
for n in range(1, 11):
    rep = build_report(BoundState(System.HYDROGEN, n))
    print(
        f"{n:3d} {hydrogen_energy(n):12.6f} {rep.i_rho_numeric:14.10f} {rep.i_rho_closed:10.6f}"
        f" {rep.i_gamma_numeric:12.6f} {rep.product:18.15f}"
    )

# %% [markdown]
# Sharper localisation in position (large ``I_rho``) is paid for by broader
# momentum spread (small ``I_gamma``): the product stays pinned at 8.

# %%
ns = np.arange(1, 11)
energies = np.abs([hydrogen_energy(int(n)) for n in ns])
print("I_rho / |E| :", np.unique(np.round([build_report(BoundState("hydrogen", int(n))).i_rho_numeric / e
                                             for n, e in zip(ns, energies)], 10)))
