# %% [markdown]
# # Infinite well: momentum Fisher information from position space
#
# For a real wavefunction, ``I_gamma = 4 int x^2 psi^2 dx``, a finite
# position-space integral.  Here it is compared with the direct route
# through the numerically transformed momentum density, whose tail decays
# only like p^-4.

# %%
import math
import time

from qfisher import well_fisher_momentum_direct, well_fisher_momentum_via_position

# %%
for n in range(1, 5):
    t0 = time.perf_counter()
    via_x = well_fisher_momentum_via_position(n, 1.0).value
    t1 = time.perf_counter()
    direct = well_fisher_momentum_direct(n, 1.0).value
    t2 = time.perf_counter()
    print(
        f"n={n}: position route {via_x:.10f} ({1e3 * (t1 - t0):.1f} ms)"
        f"   momentum route {direct:.10f} ({t2 - t1:.1f} s)   rel diff {abs(direct - via_x) / via_x:.1e}"
    )

print(f"ground state, a=1: 1/3 - 2/pi^2 = {1 / 3 - 2 / math.pi**2:.10f}")

# %% [markdown]
# As n grows the value tends to a^2/3 from below.

# %%
for n in (1, 5, 20, 100):
    print(n, well_fisher_momentum_via_position(n, 1.0).value)
