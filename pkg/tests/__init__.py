"""
wavecrest tests
"""
