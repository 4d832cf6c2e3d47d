"""Desk-scale workbench for Galois-module cohomology: finite groups,
G-lattices with exact integer linear algebra, group/Tate/hypercohomology,
flasque and coflasque resolutions of two-term complexes with replayable
certificates, crossed-module nonabelian H^-1/H^0, and Mayer-Vietoris
patching diagnostics over finite-group models."""

__version__ = "0.1.0"
