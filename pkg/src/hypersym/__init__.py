"""Spectral and symmetry analysis of oriented hypergraphs."""

from .corpus import HyperflowerParams, enzyme_fixtures, hyperflower, random_hypergraph
from .hypermodel import Hyperedge, OrientedHypergraph, from_edges, load, sigma_transform
from .kernels import BACKEND
from .matrices import adjacency_matrix, incidence_matrix, kirchhoff_matrix, laplacians
from .quotient import VertexPartition, quotient_matrices, quotient_network, signed_spectral_split, spectral_split
from .reactions import parse_reactions
from .signedsym import SignedPermutation, signed_automorphism_group, signed_redundancy
from .spectra import eig_symmetric, hypergraph_spectrum
from .symmetry import Permutation, automorphism_group, classify_pair, is_automorphism, orbits, redundancy

__version__ = "0.1.0"
