# coding: utf-8

# # The base graph
#
# Two bases are adjacent when they differ by a single exchange. Pairs at
# distance two share a common neighbourhood that is a square, a pyramid or an
# octahedron. A matroid is binary exactly when no octahedron appears.

# In[1]:

from __future__ import annotations

from matroid_splits import BaseGraph, catalog, classify_common_neighborhood, is_binary, uniform
from matroid_splits.base_graph import neighborhood_census
from matroid_splits.documents import export_dot
from matroid_splits.zoo import binary_representation

# In[2]:

for name, M in [("U(4,2)", uniform(4, 2)), ("K4", catalog("m_k4")), ("W3", catalog("w3")), ("Fano", catalog("fano"))]:
    G = BaseGraph(M)
    print(f"{name:7s} vertices={len(G):3d} edges={G.edge_count:4d} binary={is_binary(M, G)}", neighborhood_census(G))

# In U(4,2) the bases {1,2} and {3,4} sit at distance two. Their four common
# neighbours form an octahedron with them, so U(4,2) is not binary.

# In[3]:

G = BaseGraph(uniform(4, 2))
print(classify_common_neighborhood(G, [1, 2], [3, 4]))

# In K4 the same kind of pair only ever sees squares and pyramids.

# In[4]:

K4 = catalog("m_k4")
print(classify_common_neighborhood(BaseGraph(K4), [1, 2, 3], [1, 4, 5]))

# A binary matroid gets an explicit GF(2) matrix built from fundamental
# circuits. Non-binary ones return None.

# In[5]:

print(binary_representation(K4))
print(binary_representation(uniform(4, 2)))

# The graph exports as DOT for graphviz.

# In[6]:

print(export_dot(G, {"binary": False}))
