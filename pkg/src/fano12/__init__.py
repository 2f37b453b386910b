"""Exact verification of the computations behind genus 12 Fano threefolds with a torus action."""

__version__ = "0.1.0"
