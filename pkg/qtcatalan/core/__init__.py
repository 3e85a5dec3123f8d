"""Polynomials, combinatorial statistics and the rational formula"""
