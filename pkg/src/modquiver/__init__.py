"""Quandle module quivers and their polynomial invariants of oriented links."""
