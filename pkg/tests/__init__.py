"""
Querty-OS Test Suite
"""
