"""Pydantic models for every value that leaves the process"""
