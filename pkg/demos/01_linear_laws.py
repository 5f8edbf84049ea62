"""
Linear laws of simple series
============================

A linear law is the unit vector that the time-delay embedding of a series
maps closest to zero.
"""

import numpy as np

from llt import EmbeddingConfig, embed_matrix, gram_matrix, linear_law

# an arithmetic progression obeys z[t] - 2 z[t+1] + z[t+2] = 0 exactly
z = 3.0 + 0.5 * np.arange(20)
cfg = EmbeddingConfig(dim=3)
print("embedding rows:\n", embed_matrix(z, cfg)[:3])
print("gram matrix:\n", gram_matrix(z, cfg))

law = linear_law(z, cfg)
print("law:", np.round(law.v, 6), "eigenvalue:", law.eigenvalue)

# a pure sinusoid satisfies a two-term recurrence, so dim=3 annihilates it too
w = np.sin(0.4 * np.arange(50))
law = linear_law(w, cfg)
print("sinusoid law:", np.round(law.v, 6), "eigenvalue:", law.eigenvalue)

# the lag spreads the window: rows are z[i*lag : i*lag + dim]
print(embed_matrix(np.arange(1.0, 7.0), EmbeddingConfig(dim=2, lag=2)))

# noise has no exact law; the smallest eigenvalue stays well away from zero
noise = np.random.default_rng(0).normal(size=200)
print("noise eigenvalue:", linear_law(noise, cfg).eigenvalue)
