"""
Test Suite for Plusweld
"""
