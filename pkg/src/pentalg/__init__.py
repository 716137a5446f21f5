"""Finite pentagon algebras: verification, free objects, constructions and census."""
