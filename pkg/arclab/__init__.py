"""
arclab: exact arithmetic lab for arcs of F_q^k.

Finite fields, tangent functions and Segre products of arcs, verifiers
for the identities built on them, and an exhaustive maximum arc search.
"""
