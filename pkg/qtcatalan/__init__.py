"""
qtcatalan - exact higher q,t-Catalan polynomials and the diagonal ideal checks
"""
__version__ = "1.0.0"
