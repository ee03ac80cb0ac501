"""Exact max-plus tropical calculus."""
