"""
Integration Tests
"""
