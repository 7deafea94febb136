"""Unit tests for core business logic"""
