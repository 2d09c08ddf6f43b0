"""
Hecke algebras of symmetric groups: Kazhdan-Lusztig bases, cells,
cell-module filtrations and Specht filtrations.
"""
