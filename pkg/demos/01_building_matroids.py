# coding: utf-8

# # Building matroids
#
# A matroid here is nothing more than its list of bases on the ground set
# {1..n}. Every constructor ends in the same place: a validated, canonically
# ordered base family.

# In[1]:

from __future__ import annotations

from matroid_splits import (
    GraphSpec,
    catalog,
    closure,
    connected_components,
    direct_sum,
    from_bases,
    from_gf2_matrix,
    graphic,
    rank_of,
    relax,
    transversal,
    uniform,
)
from matroid_splits import documents
from matroid_splits.errors import ExchangeAxiomViolation

# In[2]:

U = uniform(4, 2)
print(U, U.bases)

# Graphic matroids come from an edge list. Edge i becomes element i, and the
# bases are spanning forests. Here is K4 with its six edges.

# In[3]:

K4 = graphic(GraphSpec(4, ((1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4))))
print(len(K4), "spanning trees, rank", K4.r)
assert K4 == catalog("m_k4")

# Binary matroids are read off the columns of a 0/1 matrix.

# In[4]:

fano = from_gf2_matrix(["1001101", "0101011", "0010111"])
print(len(fano), "bases")

# Transversal matroids take a list of parts and keep the sets that can be matched.

# In[5]:

T = transversal([[1, 2, 3], [3, 4]], 4)
print(T.bases)

# Families that break the exchange axiom are refused, with a witness triple
# (B1, B2, e): no f in B2 - B1 makes B1 - e + f a base.

# In[6]:

try:
    from_bases(4, [[1, 2], [3, 4]])
except ExchangeAxiomViolation as err:
    print("rejected:", err.witness)

# Rank, closure and components work on any subset.

# In[7]:

print("rank of {1,2,3} in K4:", rank_of(K4, [1, 2, 3]))
print("closure of {1,2}:", sorted(closure(K4, [1, 2])))
S = direct_sum(uniform(2, 1), uniform(3, 2))
print("components of U(2,1)+U(3,2):", [sorted(c) for c in connected_components(S)])

# Relaxing the circuit-hyperplane {3,4,5} of K4 gives the whirl W3.

# In[8]:

W3 = relax(K4, [3, 4, 5])
print(len(W3), "bases;", W3 == catalog("w3"))

# Everything round-trips through a small JSON document.

# In[9]:

text = documents.serialize(U)
print(text)
assert documents.parse(text) == U
print(documents.parse('{"format": "matroid/v1", "relax": {"base_doc": {"catalog": "m_k4"}, "set": [3, 4, 5]}}') == W3)
