# coding: utf-8

# # From good partitions to splits
#
# Cut the ground set into E1 and E2 with ranks r1 and r2, and pick integers
# 0 < a1 < r1 and 0 < a2 < r2 with r1 + r2 = r + a1 + a2. If the union
# condition (P2) or its weak form (P2') holds, the two families
#
#     part1: bases meeting E1 in at most r1 - a1 elements
#     part2: bases meeting E2 in at most r2 - a2 elements
#
# cut the base polytope along the hyperplane sum_{e in E1} x_e = r1 - a1.

# In[1]:

from __future__ import annotations

from matroid_splits import catalog, construct_split, is_good_partition, search_splits, uniform, verify_split
from matroid_splits.splits import PartitionRejected, SearchStats

# In[2]:

U = uniform(4, 2)
gp = is_good_partition(U, [1, 2], 1, 1)
print(gp)
split = construct_split(U, gp)
print("part1:", split.part1_bases)
print("part2:", split.part2_bases)
print("hyperplane:", split.hyperplane.describe())

# The verifier checks seven conditions plus the facet test independently of
# how the candidate was produced.

# In[3]:

print(verify_split(U, split.part1_bases, split.part2_bases, split.hyperplane).checks)

# The whirl W3 has splits too. The search visits every bipartition with 1 in
# E1 and every admissible (a1, a2).

# In[4]:

stats = SearchStats()
found = search_splits(catalog("w3"), stats=stats)
print(len(found), "split(s) of W3;", stats.as_dict())
for c in found:
    print(" ", c.hyperplane.describe())

# K4 is binary, so nothing should survive. The rejections say which
# condition failed and carry a witness.

# In[5]:

K4 = catalog("m_k4")
for E1, a in [({1, 2, 3}, (1, 2)), ({1, 2, 5}, (1, 1)), ({1, 2}, (1, 1)), ({1, 3}, (1, 1))]:
    try:
        is_good_partition(K4, E1, *a)
    except PartitionRejected as err:
        print(sorted(E1), a, "->", err.reason, "X,Y =", err.p2_witness, "exchange:", err.exchange_witness)

# In[6]:

print("splits of K4:", search_splits(K4))
