"""
Numerical core: Planck curves, quantization, synapse, spike trains, evaluation.
"""
