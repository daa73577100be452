# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Simplicial polytopes that are not weakly vertex-decomposable
#
# ``delta_even(3)`` is the polar of the 2 x 7 transportation polytope with
# margins ``(7, 7)`` and seven 2s: 14 vertices, 140 facets, dimension 5.

# %%
from polydecomp import (
    delta_even,
    delta_odd,
    is_weakly_k_decomposable,
    make_polytope,
    polar_complex,
    proof_witnesses,
)
from polydecomp.decomp import check_hirsch
from polydecomp.family import column_symmetry, delete_vertices, impurity_witness

d6 = delta_even(3)
assert d6 == polar_complex(make_polytope((7, 7), (2,) * 7))
print(d6)

# %% [markdown]
# The exhaustive search finds no weak vertex-shedding order. With the column
# symmetry only one ``u`` and one ``v`` vertex need to be tried first.

# %%
dec = is_weakly_k_decomposable(d6, 0, symmetry=column_symmetry(7), trace=True)
print(dec.result, "nodes:", dec.nodes_explored)
for face, why in dec.trace:
    print("  first shed", face, "->", why)

# %% [markdown]
# Deleting two vertices from the same row always leaves an undersized facet.

# %%
print(impurity_witness(d6, ["u1", "u2"]))
print(impurity_witness(d6, ["u1", "v2"]))

# %%
w = proof_witnesses(3, d6)
gamma1 = delete_vertices(d6, ["u1", "u2"])
print("F - u1 =", sorted(w.common))
print("still a facet after deleting u1, u2:", w.common in gamma1.label_sets())
print("G survives:", w.G in gamma1.label_sets())

# %% [markdown]
# The Hirsch bound still holds for these polytopes.

# %%
for c in (d6, delta_odd(3)):
    print(check_hirsch(c))
