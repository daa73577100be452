# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Simplicial complexes as facet lists
#
# A complex is stored by its facets only. Links, deletions and the
# facet-ridge diameter are all computed from that list.

# %%
from polydecomp import deletion, diameter, faces_of_dim, from_facets, is_pure, link, to_cplx

octahedron = from_facets([
    [x, y, z] for x in ("a", "A") for y in ("b", "B") for z in ("c", "C")
])
print(octahedron)
print("f-counts:", [len(faces_of_dim(octahedron, k)) for k in range(3)])

# %% [markdown]
# The link of a vertex of the octahedron is a 4-cycle; deleting a vertex
# leaves a disk whose boundary is that same 4-cycle.

# %%
print("link of a:", sorted(link(octahedron, ["a"]).facet_labels()))
disk = deletion(octahedron, ["a"])
print("deletion of a:", len(disk), "facets, pure:", is_pure(disk)[0])

# %% [markdown]
# Deleting two opposite vertices leaves only the equatorial 4-cycle: still
# pure, but one dimension lower, so it cannot be a shedding step.

# %%
both = deletion(deletion(octahedron, ["a"]), ["A"])
print(is_pure(both), "dim", both.dim, sorted(both.facet_labels()))

# %%
rep = diameter(octahedron)
print("diameter:", rep.diameter, "between",
      octahedron.names(rep.eccentric_pair[0]), octahedron.names(rep.eccentric_pair[1]))

# %%
print(to_cplx(octahedron, header="octahedron boundary"))
