"""Checks, runner and command line"""
