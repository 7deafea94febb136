"""Middleware components for the API"""
