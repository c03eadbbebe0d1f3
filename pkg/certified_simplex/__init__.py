from .src.certified_simplex import CertifiedSimplex
