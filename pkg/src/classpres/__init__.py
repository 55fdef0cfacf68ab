"""Presentations of finite classical groups on standard generators."""
