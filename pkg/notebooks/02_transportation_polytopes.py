# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # A 2 x 4 transportation polytope and its polar
#
# Margins ``a = (3, 5)`` and ``b = (2, 2, 2, 2)`` give a simple
# 3-dimensional polytope. Its vertices come from spanning trees of K_{2,4}.

# %%
from polydecomp import (
    enumerate_vertices,
    is_k_decomposable,
    is_nondegenerate,
    make_polytope,
    polar_complex,
    verify_certificate,
)
from polydecomp.decomp import check_billera_provan, check_hirsch, shedding_order

p = make_polytope((3, 5), (2, 2, 2, 2))
print("dim", p.dim, "facet cells", p.facet_cells)
print("nondegenerate:", is_nondegenerate(p))

# %% [markdown]
# Each vertex is named by its first three upper-row entries; the remaining
# entries are forced by the margins.

# %%
verts = enumerate_vertices(p)
for v in verts:
    print("".join(str(x) for x in v.entries[0][:3]), "|", v.format().replace("\n", " / "))

# %% [markdown]
# The polar complex has one vertex per facet cell and one triangle per
# polytope vertex. It is vertex-decomposable.

# %%
c = polar_complex(p)
dec = is_k_decomposable(c, 0)
print(dec.result, "shedding order:", shedding_order(dec.certificate))
print("certificate replays:", bool(verify_certificate(c, dec.certificate, 0, "strong")))
print(check_billera_provan(c, 0, "strong", dec))
print(check_hirsch(c))

# %% [markdown]
# With ``a = (6, 6)`` and six 2s, one row total equals the sum of three
# columns, so the polytope is degenerate and its polar is not simplicial.

# %%
print(is_nondegenerate(make_polytope((6, 6), (2,) * 6)))
