"""Graded pieces of powers of the alternating ideal"""
