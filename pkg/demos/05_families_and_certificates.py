# coding: utf-8

# # Families of splits, direct sums and certificates

# In[1]:

from __future__ import annotations

from matroid_splits import (
    LatticePathSpec,
    catalog,
    classify,
    direct_sum,
    lattice_path,
    lattice_path_splits,
    lift_split_direct_sum,
    project_split_direct_sum,
    search_splits,
    split_distinctness_key,
    uniform,
    uniform_split_family,
    verify_certificate,
)

# ## Uniform matroids
#
# U(n, r) splits along {1..k} for each k up to n // 2. Splits with different k
# are pairwise distinct up to relabelling.

# In[2]:

family = uniform_split_family(6, 3)
for k, group in family.items():
    print("k =", k, [(c.partition.a1, c.partition.a2) for c in group])
keys = {split_distinctness_key(c) for g in family.values() for c in g}
print(len(keys), "distinct shapes")

# ## Lattice path matroids
#
# Bases are the monotone lattice paths between a lower and an upper boundary,
# recorded by the steps at which the path goes north.

# In[3]:

spec = LatticePathSpec(3, 4, lower="EEENNNN", upper="NENENEN")
M = lattice_path(spec)
print(M, "north-step intervals:", spec.intervals)
for c in lattice_path_splits(spec):
    p = c.presentations
    print(f"x={p['x']} j={p['j']}", c.hyperplane.describe())
    print("   part1 presentation:", p["part1"])
    print("   part2 presentation:", p["part2"])

# ## Direct sums
#
# A split of one component lifts to the sum, and projecting it back recovers
# the original.

# In[4]:

U42, U21 = uniform(4, 2), uniform(2, 1)
s = search_splits(U42)[0]
lifted = lift_split_direct_sum(s, U42, U21)
print(lifted.hyperplane.describe(), len(lifted.part1), len(lifted.part2))
k, back = project_split_direct_sum(lifted, U42, U21)
print("component", k, back.unordered == s.unordered)

# ## Certificates
#
# classify returns either a verified split or a reason there is none. Binary
# matroids get a GF(2) matrix. If some vertex of the base graph has degree
# equal to the polytope dimension, a degree certificate is added.

# In[5]:

cube = direct_sum(direct_sum(U21, U21), U21)
for name, N in [("U(5,2)", uniform(5, 2)), ("Fano", catalog("fano")), ("U21^3", cube)]:
    certs = classify(N)
    print(name, [c.kind for c in certs], all(verify_certificate(N, c) for c in certs))
