"""Monochromatic subgraph densities over step graphons.

Submodules:
    graphs         small graphs, canonical forms, catalog, even expansion
    graphons       step function kernels, exact and floating variants
    density        homomorphism / signed / induced densities, batched suites
    decomposition  triangle-tree recognition and pendant-tree extension
    inequalities   the commonality inequality battery
    certificate    exact linear-algebra verification of the 18-class certificate
    search         numeric minimization and finite Ramsey multiplicity counts
"""

__version__ = "0.1.0"
