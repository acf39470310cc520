# coding: utf-8

# # Base polytopes
#
# The base polytope is the convex hull of the 0/1 incidence vectors of the
# bases. Its dimension is n minus the number of connected components. All
# arithmetic here is exact.

# In[1]:

from __future__ import annotations

import numpy as np

from matroid_splits import SplitHyperplane, catalog, connected_components, dimension, uniform, vertices
from matroid_splits.polytope import separating_hyperplane
from matroid_splits.splits import level_families

# In[2]:

V = vertices(uniform(4, 2))
print(V)
print("row sums:", V.sum(axis=1), "dimension:", dimension(uniform(4, 2)))

# In[3]:

for name in ("m_star", "m_k4", "w3", "fano"):
    M = catalog(name)
    print(name, "n =", M.n, "components =", len(connected_components(M)), "dim =", dimension(M))

# A split hyperplane sum(c_i x_i) = level cuts the polytope into two
# subpolytopes whose vertices are themselves base families.

# In[4]:

H = SplitHyperplane((1, 1, 0, 0), 1)
print(H.describe())
side = np.sign(V @ np.array(H.coefficients) - H.level)
for row, s in zip(V, side):
    print(row, {-1: "below", 0: "on", 1: "above"}[int(s)])

# Given two candidate families, the package searches for a separating
# hyperplane: indicator vectors first, then an exact linear program.

# In[5]:

W3 = catalog("w3")
part1, part2 = level_families(W3, [1, 2, 6], 1, 2)
print(separating_hyperplane(W3.n, W3.masks, set(part1), set(part2)).describe())

# m_star is the cycle matroid of a triangle with one edge doubled (elements 1
# and 4 are parallel). Two families can each be base families and still fail
# to form a split, because their overlap is not a facet of the polytope.

# In[6]:

from matroid_splits import verify_split

M = catalog("m_star")
report = verify_split(M, [[1, 2], [2, 3], [2, 4]], [[1, 3], [2, 3], [3, 4]])
print("verdict:", report.overall)
print(report.checks)
