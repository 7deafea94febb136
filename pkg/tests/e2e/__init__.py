"""End-to-end tests for complete workflows"""
